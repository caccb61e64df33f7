#include "lietwist/weyl.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace lietwist {

bool operator<(const WeylKey& a, const WeylKey& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  if (a.x != b.x) return a.x < b.x;
  return a.d < b.d;
}

std::string WeylKey::str() const {
  std::string s;
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += detail::power_str("x", i, x[i]);
  }
  for (int i = 0; i < d.dim(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += " ";
    s += detail::power_str("d", i, d[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<std::pair<WeylKey, Rational>> weyl_monomial_mul(const WeylKey& u, const WeylKey& v) {
  std::vector<std::pair<WeylKey, Rational>> out;
  const MultiIndex bound = u.d.min_with(v.x);
  MultiIndex k(u.d.dim());
  do {
    const Rational c = multi_binomial(u.d, k) * multi_binomial(v.x, k) * k.factorial();
    out.emplace_back(WeylKey{u.x + (v.x - k), (u.d - k) + v.d}, c);
  } while (next_multi_below(k, bound));
  return out;
}

Polynomial weyl_monomial_fock(const WeylKey& k, const Rational& c, const Polynomial& f) {
  Polynomial out(f.dim());
  for (const auto& [m, cf] : f.terms()) {
    if (!m.contains(k.d)) continue;
    Rational fall(1);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < k.d[i]; ++j) fall *= Rational(m[i] - j);
    out.add_term((m - k.d) + k.x, c * cf * fall);
  }
  return out;
}

WeylElement::WeylElement(int dim, int order)
    : dim_(dim), order_(order), cert_(kExactOrder), xbound_(0), xcap_(2 * order + 8) {
  if (dim < 1) throw std::invalid_argument("WeylElement: dim must be >= 1");
  if (order < 0) throw std::invalid_argument("WeylElement: negative order");
}

WeylElement WeylElement::one(int dim, int order) { return constant(dim, order, Rational(1)); }

WeylElement WeylElement::constant(int dim, int order, const Rational& c) {
  WeylElement w(dim, order);
  w.add_term(WeylKey{MultiIndex(dim), MultiIndex(dim)}, c);
  return w;
}

WeylElement WeylElement::x_gen(int dim, int order, int i) {
  WeylElement w(dim, order);
  w.add_term(WeylKey{MultiIndex::unit(dim, i), MultiIndex(dim)}, Rational(1));
  w.xbound_ = 1;
  return w;
}

WeylElement WeylElement::d_gen(int dim, int order, int i) {
  WeylElement w(dim, order);
  w.add_term(WeylKey{MultiIndex(dim), MultiIndex::unit(dim, i)}, Rational(1));
  return w;
}

WeylElement WeylElement::monomial(int order, const WeylKey& k, const Rational& c) {
  WeylElement w(k.x.dim(), order);
  w.add_term(k, c);
  w.xbound_ = k.x_degree();
  return w;
}

WeylElement WeylElement::from_polynomial(const Polynomial& f, int order) {
  WeylElement w(f.dim(), order);
  for (const auto& [m, c] : f.terms()) w.add_term(WeylKey{m, MultiIndex(f.dim())}, c);
  w.xbound_ = f.degree();
  return w;
}

WeylElement WeylElement::from_momentum(const MomentumSeries& s) {
  WeylElement w(s.dim(), s.order());
  for (const auto& [m, c] : s.terms()) w.add_term(WeylKey{MultiIndex(s.dim()), m}, c);
  w.cert_ = s.cert();
  return w;
}

Rational WeylElement::coeff(const WeylKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::add_term(const WeylKey& k, const Rational& c) {
  if (c.is_zero()) return;
  xbound_ = std::max(xbound_, k.x_degree());
  if (k.d.degree() > order_) {
    cert_ = std::min(cert_, order_);
    return;
  }
  if (k.x.degree() > xcap_)
    throw std::runtime_error("WeylElement: x-degree cap " + std::to_string(xcap_) +
                             " exceeded by term " + k.str());
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int WeylElement::max_x_degree() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.x_degree());
  return m;
}

int WeylElement::max_d_degree() const {
  int m = 0;
  for (const auto& [k, c] : terms_) m = std::max(m, k.d_degree());
  return m;
}

bool WeylElement::is_momentum_only() const {
  for (const auto& [k, c] : terms_)
    if (k.x_degree() > 0) return false;
  return true;
}

MomentumSeries WeylElement::to_momentum() const {
  MomentumSeries s(dim_, order_);
  for (const auto& [k, c] : terms_) {
    if (k.x_degree() > 0)
      throw std::runtime_error("WeylElement: not momentum-only, contains " + k.str());
    s.add_term(k.d, c);
  }
  s.set_cert(cert_);
  return s;
}

Polynomial WeylElement::x_part() const {
  Polynomial p(dim_);
  for (const auto& [k, c] : terms_)
    if (k.d_degree() == 0) p.add_term(k.x, c);
  return p;
}

void WeylElement::require_compatible(const WeylElement& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("WeylElement: dimension mismatch");
  if (order_ != o.order_) throw std::invalid_argument("WeylElement: order mismatch");
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  require_compatible(o);
  xcap_ = std::max(xcap_, o.xcap_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  cert_ = std::min(cert_, o.cert_);
  xbound_ = std::max(xbound_, o.xbound_);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  require_compatible(o);
  xcap_ = std::max(xcap_, o.xcap_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  cert_ = std::min(cert_, o.cert_);
  xbound_ = std::max(xbound_, o.xbound_);
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement r(dim_, order_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  r.cert_ = cert_;
  r.xbound_ = xbound_;
  r.xcap_ = xcap_;
  return r;
}

WeylElement WeylElement::operator*(const Rational& c) const {
  WeylElement r(dim_, order_);
  if (!c.is_zero())
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  r.cert_ = cert_;
  r.xbound_ = xbound_;
  r.xcap_ = xcap_;
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  require_compatible(o);
  WeylElement r(dim_, order_);
  r.xcap_ = std::max(xcap_, o.xcap_);
  bool dropped = false;
  for (const auto& [ku, cu] : terms_) {
    for (const auto& [kv, cv] : o.terms_) {
      // Least possible d-degree of any contribution of this pair.
      const int reach = ku.d_degree() - ku.d.min_with(kv.x).degree() + kv.d_degree();
      if (reach > order_) {
        dropped = true;
        continue;
      }
      const Rational c = cu * cv;
      for (const auto& [k, f] : weyl_monomial_mul(ku, kv)) {
        if (k.d.degree() > order_) {
          dropped = true;
          continue;
        }
        r.add_term(k, c * f);
      }
    }
  }
  // Certified order: errors of `this` (d-degree > cert) can reach down by at
  // most the x-degree of the right factor; the right factor's d's are never
  // consumed, so its errors stay above its own certified order.
  int res = std::min(is_exact_order(cert_) ? kExactOrder : cert_ - o.xbound_, o.cert_);
  if (dropped) res = std::min(res, order_);
  r.cert_ = clamp_cert(res);
  r.xbound_ = xbound_ + o.xbound_;
  return r;
}

WeylElement WeylElement::commutator(const WeylElement& o) const {
  return *this * o - o * *this;
}

bool WeylElement::equal_up_to(const WeylElement& o, int k) const {
  for (const auto& [key, c] : terms_)
    if (key.d_degree() <= k && o.coeff(key) != c) return false;
  for (const auto& [key, c] : o.terms_)
    if (key.d_degree() <= k && coeff(key) != c) return false;
  return true;
}

WeylElement WeylElement::s0() const {
  WeylElement r(dim_, order_);
  r.xcap_ = xcap_;
  const MultiIndex none(dim_);
  for (const auto& [k, c] : terms_) {
    const Rational sc = (k.d_degree() % 2 == 0) ? c : -c;
    for (const auto& [key, f] : weyl_monomial_mul(WeylKey{none, k.d}, WeylKey{k.x, none}))
      r.add_term(key, sc * f);
  }
  r.cert_ = is_exact_order(cert_) ? kExactOrder : clamp_cert(cert_ - xbound_);
  r.xbound_ = xbound_;
  return r;
}

Polynomial WeylElement::fock_act(const Polynomial& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("fock_act: dimension mismatch");
  if (!is_exact_order(cert_) && cert_ < f.degree())
    throw std::runtime_error("fock_act: certified order " + std::to_string(cert_) +
                             " is insufficient for a polynomial of degree " +
                             std::to_string(f.degree()));
  Polynomial out(dim_);
  for (const auto& [k, c] : terms_) out += weyl_monomial_fock(k, c, f);
  return out;
}

std::string WeylElement::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    const std::string s = k.str();
    parts.emplace_back(c, s == "1" ? "" : s);
  }
  return detail::join_terms(parts);
}

}  // namespace lietwist
