#ifndef LIETWIST_RATIONAL_HPP
#define LIETWIST_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lietwist {

/// Exact rational number over arbitrary-precision integers.
///
/// Always kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Parses "p", "p/q" or a decimal-free signed integer string.
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view s);

  static Rational factorial(long n);
  static Rational binomial(long n, long k);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  Rational reciprocal() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

 private:
  mpq_class v_;
};

}  // namespace lietwist

#endif  // LIETWIST_RATIONAL_HPP
