#include "lietwist/momentum_series.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace lietwist {

MomentumSeries::MomentumSeries(int dim, int order)
    : dim_(dim), order_(order), cert_(kExactOrder) {
  if (dim < 1) throw std::invalid_argument("MomentumSeries: dim must be >= 1");
  if (order < 0) throw std::invalid_argument("MomentumSeries: negative order");
}

MomentumSeries MomentumSeries::constant(int dim, int order, const Rational& c) {
  MomentumSeries s(dim, order);
  s.add_term(MultiIndex(dim), c);
  return s;
}

MomentumSeries MomentumSeries::generator(int dim, int order, int i) {
  MomentumSeries s(dim, order);
  s.add_term(MultiIndex::unit(dim, i), Rational(1));
  return s;
}

MomentumSeries MomentumSeries::monomial(int order, const MultiIndex& m, const Rational& c) {
  MomentumSeries s(m.dim(), order);
  s.add_term(m, c);
  return s;
}

Rational MomentumSeries::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MomentumSeries::constant_term() const { return coeff(MultiIndex(dim_)); }

void MomentumSeries::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  if (m.degree() > order_) {
    cert_ = std::min(cert_, order_);
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MomentumSeries::min_degree() const {
  return terms_.empty() ? order_ + 1 : terms_.begin()->first.degree();
}

int MomentumSeries::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void MomentumSeries::require_compatible(const MomentumSeries& o) const {
  if (dim_ != o.dim_ || order_ != o.order_)
    throw std::invalid_argument("MomentumSeries: dimension/order mismatch");
}

MomentumSeries& MomentumSeries::operator+=(const MomentumSeries& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  cert_ = std::min(cert_, o.cert_);
  return *this;
}

MomentumSeries& MomentumSeries::operator-=(const MomentumSeries& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  cert_ = std::min(cert_, o.cert_);
  return *this;
}

MomentumSeries MomentumSeries::operator-() const {
  MomentumSeries r(dim_, order_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  r.cert_ = cert_;
  return r;
}

MomentumSeries MomentumSeries::operator*(const Rational& c) const {
  MomentumSeries r(dim_, order_);
  if (!c.is_zero())
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  r.cert_ = cert_;
  return r;
}

MomentumSeries MomentumSeries::operator*(const MomentumSeries& o) const {
  require_compatible(o);
  MomentumSeries r(dim_, order_);
  bool dropped = false;
  for (const auto& [ma, ca] : terms_) {
    const int da = ma.degree();
    for (const auto& [mb, cb] : o.terms_) {
      if (da + mb.degree() > order_) {
        dropped = true;
        continue;
      }
      r.add_term(ma + mb, ca * cb);
    }
  }
  r.cert_ = std::min(cert_, o.cert_);
  if (dropped) r.cert_ = std::min(r.cert_, order_);
  return r;
}

MomentumSeries MomentumSeries::partial(int rho) const {
  if (rho < 0 || rho >= dim_) throw std::invalid_argument("MomentumSeries: derivative index out of range");
  MomentumSeries r(dim_, order_);
  for (const auto& [m, c] : terms_) {
    if (m[rho] == 0) continue;
    MultiIndex d = m;
    d.bump(rho, -1);
    r.add_term(d, c * Rational(m[rho]));
  }
  r.cert_ = is_exact_order(cert_) ? kExactOrder : clamp_cert(cert_ - 1);
  return r;
}

MomentumSeries MomentumSeries::homogeneous_part(int d) const {
  MomentumSeries r(dim_, order_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  r.cert_ = cert_;
  return r;
}

MomentumSeries MomentumSeries::truncated(int k) const {
  MomentumSeries r(dim_, order_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= k) r.terms_.emplace(m, c);
  r.cert_ = cert_;
  return r;
}

MomentumSeries MomentumSeries::with_order(int order) const {
  MomentumSeries r(dim_, order);
  r.cert_ = cert_;
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

bool MomentumSeries::equal_up_to(const MomentumSeries& o, int k) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() <= k && o.coeff(m) != c) return false;
  for (const auto& [m, c] : o.terms_)
    if (m.degree() <= k && coeff(m) != c) return false;
  return true;
}

MomentumSeries MomentumSeries::exp() const {
  if (!constant_term().is_zero())
    throw std::invalid_argument("MomentumSeries: exp requires zero constant term, got " +
                                constant_term().str());
  MomentumSeries acc = one(dim_, order_);
  acc.set_cert(cert_);
  MomentumSeries pw = acc;
  for (int k = 1; k <= order_ && !pw.is_zero(); ++k) {
    pw = pw * *this;
    acc += pw * Rational::factorial(k).reciprocal();
  }
  return acc;
}

MomentumSeries MomentumSeries::log() const {
  if (!constant_term().is_one())
    throw std::invalid_argument("MomentumSeries: log requires constant term 1, got " +
                                constant_term().str());
  MomentumSeries n = *this - one(dim_, order_);
  MomentumSeries acc = zero(dim_, order_);
  acc.set_cert(cert_);
  MomentumSeries pw = n;
  Rational sign(1);
  for (int k = 1; k <= order_ && !pw.is_zero(); ++k) {
    acc += pw * (sign / Rational(k));
    sign = -sign;
    pw = pw * n;
  }
  return acc;
}

std::string MomentumSeries::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += detail::power_str("d", i, m[i]);
    }
    parts.emplace_back(c, mono);
  }
  return detail::join_terms(parts);
}

}  // namespace lietwist
