#ifndef LIETWIST_BCH_HPP
#define LIETWIST_BCH_HPP

#include <stdexcept>

#include "lietwist/rational.hpp"

namespace lietwist {

/// exp(x) = sum x^k/k! in a truncated algebra; terminates when powers vanish.
/// `one` supplies the unit of the algebra, `max_terms` is a failsafe bound.
template <class A>
A alg_exp(const A& x, const A& one, int max_terms) {
  A acc = one;
  A pw = one;
  for (int k = 1; k <= max_terms; ++k) {
    pw = pw * x;
    if (pw.is_zero()) return acc;
    acc += pw * Rational::factorial(k).reciprocal();
  }
  if (!(pw * x).is_zero())
    throw std::runtime_error("alg_exp: series did not terminate at truncation");
  return acc;
}

/// log(x) for x = 1 + n with n vanishing in high powers.
template <class A>
A alg_log(const A& x, const A& one, int max_terms) {
  const A n = x - one;
  A acc = x - x;  // zero of the right shape
  A pw = n;
  Rational sign(1);
  for (int k = 1; k <= max_terms; ++k) {
    if (pw.is_zero()) return acc;
    acc += pw * (sign / Rational(k));
    sign = -sign;
    pw = pw * n;
  }
  if (!pw.is_zero())
    throw std::runtime_error("alg_log: series did not terminate at truncation");
  return acc;
}

/// Truncated Baker-Campbell-Hausdorff product log(e^A e^B). Both arguments
/// must have zero coefficient on the unit, which the caller checks through
/// `unit_coefficient` of the concrete type.
template <class A>
A bch_product(const A& a, const A& b, const A& one, int max_terms) {
  if (!a.unit_coefficient().is_zero() || !b.unit_coefficient().is_zero())
    throw std::invalid_argument("bch_product: nonzero constant term");
  return alg_log(alg_exp(a, one, max_terms) * alg_exp(b, one, max_terms), one, max_terms);
}

}  // namespace lietwist

#endif  // LIETWIST_BCH_HPP
