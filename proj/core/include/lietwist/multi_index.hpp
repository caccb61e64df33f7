#ifndef LIETWIST_MULTI_INDEX_HPP
#define LIETWIST_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "lietwist/rational.hpp"

namespace lietwist {

/// Exponent vector of a monomial in n commuting variables, stored inline
/// (dimensions up to kMaxDim; plenty for the desk-scale algebras here).
///
/// Ordered graded-lexicographically: first by total degree, ties broken by
/// lexicographic comparison of the exponent vector. This is the canonical
/// term order used for all serialized output.
class MultiIndex {
 public:
  static constexpr int kMaxDim = 12;

  explicit MultiIndex(int dim);
  MultiIndex(std::initializer_list<int> e);

  static MultiIndex unit(int dim, int i);

  int dim() const { return dim_; }
  int degree() const;
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int v) { e_[static_cast<std::size_t>(i)] = static_cast<int16_t>(v); }
  void bump(int i, int by) { e_[static_cast<std::size_t>(i)] = static_cast<int16_t>(e_[static_cast<std::size_t>(i)] + by); }
  bool is_zero() const { return degree() == 0; }

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; caller guarantees o <= *this componentwise.
  MultiIndex operator-(const MultiIndex& o) const;
  /// Componentwise <=.
  bool contains(const MultiIndex& o) const;
  MultiIndex min_with(const MultiIndex& o) const;

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.dim_ == b.dim_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }
  friend bool operator<(const MultiIndex& a, const MultiIndex& b);

  /// Product of componentwise factorials, as a rational.
  Rational factorial() const;

 private:
  std::array<int16_t, kMaxDim> e_{};
  int8_t dim_;
};

/// Componentwise product of binomial coefficients binom(b_i, k_i).
Rational multi_binomial(const MultiIndex& b, const MultiIndex& k);

/// Odometer stepping k through all multi-indices 0 <= k <= bound
/// (componentwise); returns false after the last one. Start from zero.
bool next_multi_below(MultiIndex& k, const MultiIndex& bound);

/// All multi-indices of the given dimension with total degree exactly d,
/// in graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int dim, int d);

/// All multi-indices with total degree <= d, in graded-lex order.
std::vector<MultiIndex> monomials_up_to_degree(int dim, int d);

}  // namespace lietwist

#endif  // LIETWIST_MULTI_INDEX_HPP
