#ifndef LIETWIST_PBW_HPP
#define LIETWIST_PBW_HPP

#include <map>
#include <string>
#include <vector>

#include "lietwist/lie_algebra.hpp"
#include "lietwist/polynomial.hpp"
#include "lietwist/weyl.hpp"

namespace lietwist {

/// Element of U(g) in coordinates of the ordered PBW basis
/// X1^{a_1} ... Xn^{a_n}.
class PBWElement {
 public:
  explicit PBWElement(int dim) : dim_(dim) {}

  static PBWElement zero(int dim) { return PBWElement(dim); }
  static PBWElement constant(int dim, const Rational& c);
  static PBWElement one(int dim) { return constant(dim, Rational(1)); }
  static PBWElement generator(int dim, int i);
  static PBWElement monomial(const MultiIndex& m, const Rational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coeff(const MultiIndex& m) const;
  void add_term(const MultiIndex& m, const Rational& c);

  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  PBWElement operator*(const Rational& c) const;

  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  std::string str() const;  // polynomial grammar with the X stem

 private:
  int dim_;
  std::map<MultiIndex, Rational> terms_;
};

/// Straightening, symmetrization and transport machinery for U(g) of one
/// fixed algebra. This is the module's independent ground truth: the Gutt
/// star product computed here never touches the realization matrices.
///
/// Memo caches make repeated straightening cheap; instances are not
/// thread-safe and are meant to be used from one verification run at a time.
class PBWEngine {
 public:
  explicit PBWEngine(LieAlgebraDef alg);

  const LieAlgebraDef& algebra() const { return alg_; }

  /// Product in U(g): straightens x^a x^b with the rewriting
  /// X_nu X_mu -> X_mu X_nu + C^lambda_{nu mu} X_lambda for nu > mu.
  PBWElement mul(const PBWElement& u, const PBWElement& v);
  PBWElement mul(const PBWElement& u, const PBWElement& v, const PBWElement& w);

  /// Straightens an explicit word of 0-based generator indices.
  PBWElement straighten(const std::vector<int>& word);

  /// Symmetrization map xi: S(g) -> U(g).
  PBWElement xi(const Polynomial& f);
  /// Inverse by degree-descending triangular elimination; xi_inv(xi(f)) == f.
  Polynomial xi_inv(const PBWElement& u);

  /// Gutt star product via the PBW oracle: xi_inv(xi(f) xi(g)).
  Polynomial star(const Polynomial& f, const Polynomial& g);

  /// Deformed action of a Weyl element on U(g), transported through xi.
  PBWElement deformed_act(const WeylElement& w, const PBWElement& u);

 private:
  LieAlgebraDef alg_;
  std::map<std::vector<int>, PBWElement> word_memo_;
  std::map<MultiIndex, PBWElement> xi_memo_;

  const PBWElement& xi_monomial(const MultiIndex& m);
};

}  // namespace lietwist

#endif  // LIETWIST_PBW_HPP
