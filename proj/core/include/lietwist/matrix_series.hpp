#ifndef LIETWIST_MATRIX_SERIES_HPP
#define LIETWIST_MATRIX_SERIES_HPP

#include <vector>

#include "lietwist/momentum_series.hpp"

namespace lietwist {

/// n x n matrix with MomentumSeries entries sharing one working order.
///
/// Row index is the upper (alpha) index and column index the lower (beta)
/// index throughout, matching the contraction conventions of the realization
/// machinery.
class MatrixSeries {
 public:
  MatrixSeries(int dim, int order);

  static MatrixSeries identity(int dim, int order);

  int dim() const { return dim_; }
  int order() const { return order_; }
  const MomentumSeries& at(int row, int col) const;
  MomentumSeries& at(int row, int col);

  MatrixSeries operator+(const MatrixSeries& o) const;
  MatrixSeries operator-(const MatrixSeries& o) const;
  MatrixSeries operator*(const MatrixSeries& o) const;
  MatrixSeries operator*(const Rational& c) const;

  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b);
  bool equal_up_to(const MatrixSeries& o, int k) const;

  bool is_identity() const;
  /// True when every entry has zero constant term.
  bool has_zero_constant() const;

 private:
  int dim_;
  int order_;
  std::vector<MomentumSeries> e_;

  void require_compatible(const MatrixSeries& o) const;
};

/// Termwise exponential sum; requires zero constant term.
MatrixSeries matrix_exp(const MatrixSeries& m);
/// Termwise logarithm; requires constant term equal to the identity.
MatrixSeries matrix_log(const MatrixSeries& m);
/// Inverse up to the working order; requires an invertible constant term.
MatrixSeries matrix_inv(const MatrixSeries& m);

}  // namespace lietwist

#endif  // LIETWIST_MATRIX_SERIES_HPP
