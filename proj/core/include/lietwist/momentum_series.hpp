#ifndef LIETWIST_MOMENTUM_SERIES_HPP
#define LIETWIST_MOMENTUM_SERIES_HPP

#include <map>
#include <string>

#include "lietwist/multi_index.hpp"
#include "lietwist/rational.hpp"
#include "lietwist/truncation.hpp"

namespace lietwist {

/// Truncated commutative power series in the momentum variables d1..dn,
/// with exact rational coefficients.
///
/// `order` is the working truncation order K_work: every stored multi-index
/// has total degree <= order. `cert` is the certified order K_cert: stored
/// coefficients of degree <= min(cert, order) equal those of the untruncated
/// element. Operations that can pull high-degree information down (formal
/// differentiation) decrement `cert`; elements built from finite exact data
/// carry the kExactOrder sentinel.
class MomentumSeries {
 public:
  MomentumSeries(int dim, int order);

  static MomentumSeries zero(int dim, int order) { return MomentumSeries(dim, order); }
  static MomentumSeries constant(int dim, int order, const Rational& c);
  static MomentumSeries one(int dim, int order) { return constant(dim, order, Rational(1)); }
  /// The generator d^(i), 0-based i.
  static MomentumSeries generator(int dim, int order, int i);
  static MomentumSeries monomial(int order, const MultiIndex& m, const Rational& c);

  int dim() const { return dim_; }
  int order() const { return order_; }
  int cert() const { return cert_; }
  void set_cert(int c) { cert_ = clamp_cert(c); }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  Rational coeff(const MultiIndex& m) const;
  Rational constant_term() const;
  Rational unit_coefficient() const { return constant_term(); }
  /// Adds c to the coefficient of m, dropping the entry if it becomes zero.
  /// Degrees beyond `order` are discarded and mark the element as truncated.
  void add_term(const MultiIndex& m, const Rational& c);

  int min_degree() const;  // degree of the lowest term; order+1 when zero
  int max_degree() const;

  MomentumSeries& operator+=(const MomentumSeries& o);
  MomentumSeries& operator-=(const MomentumSeries& o);
  friend MomentumSeries operator+(MomentumSeries a, const MomentumSeries& b) { return a += b; }
  friend MomentumSeries operator-(MomentumSeries a, const MomentumSeries& b) { return a -= b; }
  MomentumSeries operator-() const;
  MomentumSeries operator*(const Rational& c) const;
  /// Truncated commutative product; requires equal dim and order.
  MomentumSeries operator*(const MomentumSeries& o) const;

  friend bool operator==(const MomentumSeries& a, const MomentumSeries& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative with respect to d^(rho); lowers cert by one.
  MomentumSeries partial(int rho) const;

  /// Homogeneous part of total degree d.
  MomentumSeries homogeneous_part(int d) const;
  /// Drops terms of degree > k (bookkeeping only; cert is unchanged).
  MomentumSeries truncated(int k) const;
  /// Same terms re-housed at a new working order (must not lose terms).
  MomentumSeries with_order(int order) const;

  /// Agreement of stored coefficients up to total degree k.
  bool equal_up_to(const MomentumSeries& o, int k) const;

  /// exp of a series with zero constant term.
  MomentumSeries exp() const;
  /// log of a series with constant term 1.
  MomentumSeries log() const;

  /// Canonical text form; see the grammar notes in the README.
  std::string str() const;

 private:
  int dim_;
  int order_;
  int cert_;
  std::map<MultiIndex, Rational> terms_;

  void require_compatible(const MomentumSeries& o) const;
};

}  // namespace lietwist

#endif  // LIETWIST_MOMENTUM_SERIES_HPP
