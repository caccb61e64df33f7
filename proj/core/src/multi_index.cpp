#include "lietwist/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lietwist {

MultiIndex::MultiIndex(int dim) : dim_(static_cast<int8_t>(dim)) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("MultiIndex: dimension must be in 1.." + std::to_string(kMaxDim));
}

MultiIndex::MultiIndex(std::initializer_list<int> e) : dim_(static_cast<int8_t>(e.size())) {
  if (e.size() < 1 || e.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("MultiIndex: dimension must be in 1.." + std::to_string(kMaxDim));
  std::size_t i = 0;
  for (int v : e) e_[i++] = static_cast<int16_t>(v);
}

MultiIndex MultiIndex::unit(int dim, int i) {
  MultiIndex m(dim);
  m.e_[static_cast<std::size_t>(i)] = 1;
  return m;
}

int MultiIndex::degree() const {
  int d = 0;
  for (int i = 0; i < dim_; ++i) d += e_[static_cast<std::size_t>(i)];
  return d;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (int i = 0; i < dim_; ++i)
    r.e_[static_cast<std::size_t>(i)] = static_cast<int16_t>(r.e_[static_cast<std::size_t>(i)] +
                                                             o.e_[static_cast<std::size_t>(i)]);
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (int i = 0; i < dim_; ++i) {
    r.e_[static_cast<std::size_t>(i)] = static_cast<int16_t>(r.e_[static_cast<std::size_t>(i)] -
                                                             o.e_[static_cast<std::size_t>(i)]);
    if (r.e_[static_cast<std::size_t>(i)] < 0)
      throw std::invalid_argument("MultiIndex: negative exponent in difference");
  }
  return r;
}

bool MultiIndex::contains(const MultiIndex& o) const {
  for (int i = 0; i < dim_; ++i)
    if (o.e_[static_cast<std::size_t>(i)] > e_[static_cast<std::size_t>(i)]) return false;
  return true;
}

MultiIndex MultiIndex::min_with(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (int i = 0; i < dim_; ++i)
    if (o.e_[static_cast<std::size_t>(i)] < r.e_[static_cast<std::size_t>(i)])
      r.e_[static_cast<std::size_t>(i)] = o.e_[static_cast<std::size_t>(i)];
  return r;
}

bool operator<(const MultiIndex& a, const MultiIndex& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e_ < b.e_;
}

Rational MultiIndex::factorial() const {
  Rational f(1);
  for (int i = 0; i < dim_; ++i) f *= Rational::factorial(e_[static_cast<std::size_t>(i)]);
  return f;
}

Rational multi_binomial(const MultiIndex& b, const MultiIndex& k) {
  Rational r(1);
  for (int i = 0; i < b.dim(); ++i) r *= Rational::binomial(b[i], k[i]);
  return r;
}

bool next_multi_below(MultiIndex& k, const MultiIndex& bound) {
  for (int i = 0; i < k.dim(); ++i) {
    if (k[i] < bound[i]) {
      k.bump(i, 1);
      return true;
    }
    k.set(i, 0);
  }
  return false;
}

namespace {

void fill_degree(int dim, int pos, int remaining, MultiIndex& cur,
                 std::vector<MultiIndex>& out) {
  if (pos == dim - 1) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur.set(pos, v);
    fill_degree(dim, pos + 1, remaining - v, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int dim, int d) {
  std::vector<MultiIndex> out;
  MultiIndex cur(dim);
  fill_degree(dim, 0, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> monomials_up_to_degree(int dim, int d) {
  std::vector<MultiIndex> out;
  for (int k = 0; k <= d; ++k) {
    auto part = monomials_of_degree(dim, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace lietwist
