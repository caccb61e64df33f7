#include "lietwist/matrix_series.hpp"

#include <stdexcept>
#include <string>

namespace lietwist {

MatrixSeries::MatrixSeries(int dim, int order) : dim_(dim), order_(order) {
  if (dim < 1) throw std::invalid_argument("MatrixSeries: dim must be >= 1");
  e_.reserve(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int i = 0; i < dim * dim; ++i) e_.emplace_back(dim, order);
}

MatrixSeries MatrixSeries::identity(int dim, int order) {
  MatrixSeries m(dim, order);
  for (int i = 0; i < dim; ++i) m.at(i, i) = MomentumSeries::one(dim, order);
  return m;
}

const MomentumSeries& MatrixSeries::at(int row, int col) const {
  return e_[static_cast<std::size_t>(row * dim_ + col)];
}

MomentumSeries& MatrixSeries::at(int row, int col) {
  return e_[static_cast<std::size_t>(row * dim_ + col)];
}

void MatrixSeries::require_compatible(const MatrixSeries& o) const {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("MatrixSeries: dimension/order mismatch");
}

MatrixSeries MatrixSeries::operator+(const MatrixSeries& o) const {
  require_compatible(o);
  MatrixSeries r(dim_, order_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

MatrixSeries MatrixSeries::operator-(const MatrixSeries& o) const {
  require_compatible(o);
  MatrixSeries r(dim_, order_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

MatrixSeries MatrixSeries::operator*(const MatrixSeries& o) const {
  require_compatible(o);
  MatrixSeries r(dim_, order_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      MomentumSeries acc(dim_, order_);
      for (int k = 0; k < dim_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

MatrixSeries MatrixSeries::operator*(const Rational& c) const {
  MatrixSeries r(dim_, order_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
  return r;
}

bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
  return a.dim_ == b.dim_ && a.e_ == b.e_;
}

bool MatrixSeries::equal_up_to(const MatrixSeries& o, int k) const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (!at(i, j).equal_up_to(o.at(i, j), k)) return false;
  return true;
}

bool MatrixSeries::is_identity() const { return *this == identity(dim_, order_); }

bool MatrixSeries::has_zero_constant() const {
  for (const auto& s : e_)
    if (!s.constant_term().is_zero()) return false;
  return true;
}

namespace {

std::string constant_str(const MatrixSeries& m) {
  std::string s = "[";
  for (int i = 0; i < m.dim(); ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < m.dim(); ++j)
      s += (j ? " " : "") + m.at(i, j).constant_term().str();
  }
  return s + "]";
}

// Exact inverse of the constant part by Gauss-Jordan elimination.
std::vector<Rational> invert_constant(const MatrixSeries& m) {
  const int n = m.dim();
  std::vector<Rational> a(static_cast<std::size_t>(n) * n), inv(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i * n + j)] = m.at(i, j).constant_term();
      inv[static_cast<std::size_t>(i * n + j)] = Rational(i == j ? 1 : 0);
    }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!a[static_cast<std::size_t>(r * n + col)].is_zero()) { pivot = r; break; }
    if (pivot < 0)
      throw std::invalid_argument("matrix_inv: singular constant term " + constant_str(m));
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a[static_cast<std::size_t>(pivot * n + j)], a[static_cast<std::size_t>(col * n + j)]);
        std::swap(inv[static_cast<std::size_t>(pivot * n + j)], inv[static_cast<std::size_t>(col * n + j)]);
      }
    const Rational p = a[static_cast<std::size_t>(col * n + col)].reciprocal();
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(col * n + j)] *= p;
      inv[static_cast<std::size_t>(col * n + j)] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = a[static_cast<std::size_t>(r * n + col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a[static_cast<std::size_t>(r * n + j)] -= f * a[static_cast<std::size_t>(col * n + j)];
        inv[static_cast<std::size_t>(r * n + j)] -= f * inv[static_cast<std::size_t>(col * n + j)];
      }
    }
  }
  return inv;
}

}  // namespace

MatrixSeries matrix_exp(const MatrixSeries& m) {
  if (!m.has_zero_constant())
    throw std::invalid_argument("matrix_exp: nonzero constant term " + constant_str(m));
  MatrixSeries acc = MatrixSeries::identity(m.dim(), m.order());
  MatrixSeries pw = acc;
  for (int k = 1; k <= m.order(); ++k) {
    pw = pw * m;
    acc = acc + pw * Rational::factorial(k).reciprocal();
  }
  return acc;
}

MatrixSeries matrix_log(const MatrixSeries& m) {
  const MatrixSeries n = m - MatrixSeries::identity(m.dim(), m.order());
  if (!n.has_zero_constant())
    throw std::invalid_argument("matrix_log: constant term is not the identity, " + constant_str(m));
  MatrixSeries acc(m.dim(), m.order());
  MatrixSeries pw = n;
  Rational sign(1);
  for (int k = 1; k <= m.order(); ++k) {
    acc = acc + pw * (sign / Rational(k));
    sign = -sign;
    pw = pw * n;
  }
  return acc;
}

MatrixSeries matrix_inv(const MatrixSeries& m) {
  const int n = m.dim();
  const auto c_inv = invert_constant(m);
  MatrixSeries m0inv(n, m.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m0inv.at(i, j) = MomentumSeries::constant(n, m.order(), c_inv[static_cast<std::size_t>(i * n + j)]);
  // m = m0 (I + m0^{-1} nil); invert the unit-plus-nilpotent part geometrically.
  const MatrixSeries u = m0inv * m - MatrixSeries::identity(n, m.order());
  MatrixSeries acc = MatrixSeries::identity(n, m.order());
  MatrixSeries pw = MatrixSeries::identity(n, m.order());
  Rational sign(-1);
  for (int k = 1; k <= m.order(); ++k) {
    pw = pw * u;
    acc = acc + pw * sign;
    sign = -sign;
  }
  return acc * m0inv;
}

}  // namespace lietwist
