#ifndef LIETWIST_BERNOULLI_HPP
#define LIETWIST_BERNOULLI_HPP

#include "lietwist/rational.hpp"

namespace lietwist {

/// Bernoulli number B_N in the convention x/(e^x - 1) = sum B_N x^N / N!,
/// so B_1 = -1/2. Values are cached across calls.
Rational bernoulli(int n);

}  // namespace lietwist

#endif  // LIETWIST_BERNOULLI_HPP
