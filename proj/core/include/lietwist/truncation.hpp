#ifndef LIETWIST_TRUNCATION_HPP
#define LIETWIST_TRUNCATION_HPP

#include <algorithm>

namespace lietwist {

/// Certified-order sentinel for elements that carry no truncation error at all
/// (finite exact data, e.g. generators and polynomials).
inline constexpr int kExactOrder = 1 << 20;

inline bool is_exact_order(int cert) { return cert >= kExactOrder; }

inline int clamp_cert(int c) { return std::max(0, std::min(c, kExactOrder)); }

}  // namespace lietwist

#endif  // LIETWIST_TRUNCATION_HPP
