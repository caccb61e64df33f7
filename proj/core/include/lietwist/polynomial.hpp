#ifndef LIETWIST_POLYNOMIAL_HPP
#define LIETWIST_POLYNOMIAL_HPP

#include <map>
#include <string>

#include "lietwist/multi_index.hpp"
#include "lietwist/rational.hpp"

namespace lietwist {

/// Finite polynomial in the position variables x1..xn with exact rational
/// coefficients. Carrier for S(g); also houses PBW coordinates elsewhere.
class Polynomial {
 public:
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial zero(int dim) { return Polynomial(dim); }
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial one(int dim) { return constant(dim, Rational(1)); }
  static Polynomial variable(int dim, int i);
  static Polynomial monomial(const MultiIndex& m, const Rational& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coeff(const MultiIndex& m) const;
  void add_term(const MultiIndex& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator*(const Polynomial& o) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Formal derivative d/dx_i.
  Polynomial partial(int i) const;

  /// Compact text form, e.g. "x1*x2 + 1/2*x3"; parse() reads the same
  /// grammar back (x variables only).
  std::string str() const;
  static Polynomial parse(int dim, const std::string& text);

  /// Same grammar with an arbitrary variable stem (used for PBW basis output).
  std::string str_with_stem(const char* stem) const;

 private:
  int dim_;
  std::map<MultiIndex, Rational> terms_;
};

}  // namespace lietwist

#endif  // LIETWIST_POLYNOMIAL_HPP
