#include "lietwist/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lietwist {

// sum_{k=0}^{N} binom(N+1, k) B_k = 0 for N >= 1, with B_0 = 1.
Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const long m = static_cast<long>(cache.size());
    Rational acc(0);
    for (long k = 0; k < m; ++k) acc += Rational::binomial(m + 1, k) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-acc / Rational(m + 1));
  }
  return cache[static_cast<std::size_t>(n)];
}

}  // namespace lietwist
