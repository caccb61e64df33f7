#include "lietwist/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace lietwist {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::parse(std::string_view s) {
  auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::string num, den;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') num += s[i++];
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) bad();
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    if (i >= s.size()) bad();
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den += s[i++];
    if (i != s.size() || den.empty()) bad();
  }
  Rational r;
  if (den.empty()) {
    r.v_ = mpq_class(num);
  } else {
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    r.v_ = mpq_class(mpz_class(num), d);
    r.v_.canonicalize();
  }
  return r;
}

namespace {

// Small-argument caches; these sit on the hot path of every normal-ordering
// contraction.
constexpr long kCacheLimit = 128;

const mpq_class& cached_factorial(long n) {
  static std::vector<mpq_class> cache = [] {
    std::vector<mpq_class> v;
    v.reserve(kCacheLimit);
    mpz_class f = 1;
    for (long i = 0; i < kCacheLimit; ++i) {
      if (i > 0) f *= i;
      v.emplace_back(f);
    }
    return v;
  }();
  return cache[static_cast<std::size_t>(n)];
}

const mpq_class& cached_binomial(long n, long k) {
  static std::vector<mpq_class> cache = [] {
    std::vector<mpq_class> v(static_cast<std::size_t>(kCacheLimit * kCacheLimit));
    for (long i = 0; i < kCacheLimit; ++i) {
      mpz_class b;
      for (long j = 0; j <= i; ++j) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        v[static_cast<std::size_t>(i * kCacheLimit + j)] = mpq_class(b);
      }
    }
    return v;
  }();
  return cache[static_cast<std::size_t>(n * kCacheLimit + k)];
}

}  // namespace

Rational Rational::factorial(long n) {
  if (n < 0) throw std::invalid_argument("Rational: factorial of negative");
  Rational r;
  if (n < kCacheLimit) {
    r.v_ = cached_factorial(n);
  } else {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    r.v_ = mpq_class(f);
  }
  return r;
}

Rational Rational::binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r;
  if (n < kCacheLimit) {
    r.v_ = cached_binomial(n, k);
  } else {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    r.v_ = mpq_class(b);
  }
  return r;
}

std::string Rational::str() const {
  return v_.get_str();
}

}  // namespace lietwist
