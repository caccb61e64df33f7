#ifndef LIETWIST_WEYL_HPP
#define LIETWIST_WEYL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lietwist/momentum_series.hpp"
#include "lietwist/multi_index.hpp"
#include "lietwist/polynomial.hpp"
#include "lietwist/rational.hpp"
#include "lietwist/truncation.hpp"

namespace lietwist {

/// Normally ordered monomial x^a d^b of the Weyl algebra; the key *is* the
/// normal form (all x's conceptually to the left of all d's).
struct WeylKey {
  MultiIndex x;
  MultiIndex d;

  int x_degree() const { return x.degree(); }
  int d_degree() const { return d.degree(); }
  int total_degree() const { return x.degree() + d.degree(); }

  friend bool operator==(const WeylKey& a, const WeylKey& b) { return a.x == b.x && a.d == b.d; }
  friend bool operator<(const WeylKey& a, const WeylKey& b);

  std::string str() const;  // "1" for the unit monomial
};

/// Normal-ordered product of two Weyl monomials:
///   (x^a d^b)(x^c d^e) = sum_k binom(b,k) binom(c,k) k! x^{a+c-k} d^{b+e-k}.
std::vector<std::pair<WeylKey, Rational>> weyl_monomial_mul(const WeylKey& u, const WeylKey& v);

/// One monomial acting on a polynomial through the Fock representation
/// (x multiplies, d differentiates).
Polynomial weyl_monomial_fock(const WeylKey& k, const Rational& c, const Polynomial& f);

/// Truncated element of the completed Weyl algebra A^_n: a sparse normally
/// ordered sum with d-degree <= order.
///
/// cert: stored coefficients whose d-degree is <= min(cert, order) agree with
/// the untruncated element (kExactOrder when nothing was ever discarded).
/// xbound: upper bound for the x-degree of every term of the untruncated
/// element, used by the certified-order rule for products. A configurable cap
/// (default 2*order + 8) rejects pathological x-degree growth by throwing
/// rather than silently truncating.
class WeylElement {
 public:
  WeylElement(int dim, int order);

  static WeylElement zero(int dim, int order) { return WeylElement(dim, order); }
  static WeylElement one(int dim, int order);
  static WeylElement constant(int dim, int order, const Rational& c);
  static WeylElement x_gen(int dim, int order, int i);
  static WeylElement d_gen(int dim, int order, int i);
  static WeylElement monomial(int order, const WeylKey& k, const Rational& c);
  static WeylElement from_polynomial(const Polynomial& f, int order);
  static WeylElement from_momentum(const MomentumSeries& s);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int cert() const { return cert_; }
  int xbound() const { return xbound_; }
  int xcap() const { return xcap_; }
  void set_cert(int c) { cert_ = clamp_cert(c); }
  void set_xcap(int c) { xcap_ = c; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylKey, Rational>& terms() const { return terms_; }
  Rational coeff(const WeylKey& k) const;
  Rational unit_coefficient() const { return coeff(WeylKey{MultiIndex(dim_), MultiIndex(dim_)}); }
  void add_term(const WeylKey& k, const Rational& c);

  int max_x_degree() const;
  int max_d_degree() const;
  /// True when no stored term contains an x variable.
  bool is_momentum_only() const;
  /// Conversion to a momentum series; throws when x terms are present.
  MomentumSeries to_momentum() const;
  /// The d-free part as a polynomial in x.
  Polynomial x_part() const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  WeylElement operator-() const;
  WeylElement operator*(const Rational& c) const;
  /// Associative normally ordered product, truncated in d-degree.
  WeylElement operator*(const WeylElement& o) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  WeylElement commutator(const WeylElement& o) const;

  /// Agreement of stored coefficients up to total degree k.
  bool equal_up_to(const WeylElement& o, int k) const;

  /// The antipode of the undeformed Hopf algebroid structure: the
  /// antihomomorphism with S0(x) = x, S0(d) = -d.
  WeylElement s0() const;

  /// Fock action on polynomials; requires certified order >= deg(f)
  /// (refuses rather than silently truncating).
  Polynomial fock_act(const Polynomial& f) const;

  std::string str() const;

 private:
  int dim_;
  int order_;
  int cert_;
  int xbound_;
  int xcap_;
  std::map<WeylKey, Rational> terms_;

  void require_compatible(const WeylElement& o) const;
};

}  // namespace lietwist

#endif  // LIETWIST_WEYL_HPP
