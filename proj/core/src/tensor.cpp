#include "lietwist/tensor.hpp"

#include <stdexcept>

#include "text_util.hpp"

namespace lietwist {

int TensorKey::total_degree() const {
  int d = 0;
  for (const auto& k : f) d += k.total_degree();
  return d;
}

bool operator<(const TensorKey& a, const TensorKey& b) {
  const int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.f < b.f;
}

TensorElement::TensorElement(int dim, int rank, int order)
    : dim_(dim), rank_(rank), order_(order), xcap_(2 * order + 8) {
  if (rank != 2 && rank != 3) throw std::invalid_argument("TensorElement: rank must be 2 or 3");
  cert_.fill(kExactOrder);
  xbound_.fill(0);
}

TensorElement TensorElement::unit(int dim, int rank, int order) {
  TensorElement t(dim, rank, order);
  TensorKey k;
  k.f.assign(static_cast<std::size_t>(rank), WeylKey{MultiIndex(dim), MultiIndex(dim)});
  t.terms_.emplace(std::move(k), Rational(1));
  return t;
}

TensorElement TensorElement::outer(const WeylElement& a, const WeylElement& b) {
  if (a.dim() != b.dim() || a.order() != b.order())
    throw std::invalid_argument("TensorElement: outer factor mismatch");
  TensorElement t(a.dim(), 2, a.order());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) t.terms_.emplace(TensorKey{{ka, kb}}, ca * cb);
  t.cert_ = {a.cert(), b.cert(), kExactOrder};
  t.xbound_ = {a.xbound(), b.xbound(), 0};
  return t;
}

TensorElement TensorElement::outer(const WeylElement& a, const WeylElement& b,
                                   const WeylElement& c) {
  if (a.dim() != b.dim() || a.dim() != c.dim() || a.order() != b.order() || a.order() != c.order())
    throw std::invalid_argument("TensorElement: outer factor mismatch");
  TensorElement t(a.dim(), 3, a.order());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      for (const auto& [kc, cc] : c.terms())
        t.terms_.emplace(TensorKey{{ka, kb, kc}}, ca * cb * cc);
  t.cert_ = {a.cert(), b.cert(), c.cert()};
  t.xbound_ = {a.xbound(), b.xbound(), c.xbound()};
  return t;
}

Rational TensorElement::coeff(const TensorKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TensorElement::unit_coefficient() const {
  TensorKey k;
  k.f.assign(static_cast<std::size_t>(rank_), WeylKey{MultiIndex(dim_), MultiIndex(dim_)});
  return coeff(k);
}

void TensorElement::set_factor_cert(int factor, int cert) {
  cert_[static_cast<std::size_t>(factor)] = clamp_cert(cert);
}

void TensorElement::add_term(const TensorKey& k, const Rational& c) {
  if (c.is_zero()) return;
  for (int i = 0; i < rank_; ++i) {
    const auto& fk = k.f[static_cast<std::size_t>(i)];
    xbound_[static_cast<std::size_t>(i)] = std::max(xbound_[static_cast<std::size_t>(i)], fk.x_degree());
    if (fk.d.degree() > order_) {
      cert_[static_cast<std::size_t>(i)] = std::min(cert_[static_cast<std::size_t>(i)], order_);
      return;
    }
    if (fk.x.degree() > xcap_)
      throw std::runtime_error("TensorElement: x-degree cap " + std::to_string(xcap_) +
                               " exceeded by factor " + fk.str());
  }
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::require_compatible(const TensorElement& o) const {
  if (dim_ != o.dim_ || rank_ != o.rank_ || order_ != o.order_)
    throw std::invalid_argument("TensorElement: rank/dimension/order mismatch");
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_compatible(o);
  xcap_ = std::max(xcap_, o.xcap_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  for (std::size_t i = 0; i < 3; ++i) {
    cert_[i] = std::min(cert_[i], o.cert_[i]);
    xbound_[i] = std::max(xbound_[i], o.xbound_[i]);
  }
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_compatible(o);
  xcap_ = std::max(xcap_, o.xcap_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  for (std::size_t i = 0; i < 3; ++i) {
    cert_[i] = std::min(cert_[i], o.cert_[i]);
    xbound_[i] = std::max(xbound_[i], o.xbound_[i]);
  }
  return *this;
}

TensorElement TensorElement::operator-() const {
  TensorElement r(dim_, rank_, order_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  r.cert_ = cert_;
  r.xbound_ = xbound_;
  r.xcap_ = xcap_;
  return r;
}

TensorElement TensorElement::operator*(const Rational& c) const {
  TensorElement r(dim_, rank_, order_);
  if (!c.is_zero())
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  r.cert_ = cert_;
  r.xbound_ = xbound_;
  r.xcap_ = xcap_;
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  require_compatible(o);
  TensorElement r(dim_, rank_, order_);
  r.xcap_ = std::max(xcap_, o.xcap_);
  std::vector<std::vector<std::pair<WeylKey, Rational>>> parts(static_cast<std::size_t>(rank_));
  for (const auto& [ku, cu] : terms_) {
    for (const auto& [kv, cv] : o.terms_) {
      bool reachable = true;
      for (int i = 0; i < rank_ && reachable; ++i) {
        const auto& a = ku.f[static_cast<std::size_t>(i)];
        const auto& b = kv.f[static_cast<std::size_t>(i)];
        if (a.d_degree() - a.d.min_with(b.x).degree() + b.d_degree() > order_) reachable = false;
      }
      if (!reachable) continue;
      for (int i = 0; i < rank_; ++i)
        parts[static_cast<std::size_t>(i)] =
            weyl_monomial_mul(ku.f[static_cast<std::size_t>(i)], kv.f[static_cast<std::size_t>(i)]);
      const Rational c = cu * cv;
      // Cross product over the factor expansions.
      std::vector<std::size_t> idx(static_cast<std::size_t>(rank_), 0);
      for (;;) {
        TensorKey k;
        k.f.reserve(static_cast<std::size_t>(rank_));
        Rational coef = c;
        for (int i = 0; i < rank_; ++i) {
          const auto& [fk, fc] = parts[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
          k.f.push_back(fk);
          coef *= fc;
        }
        r.add_term(k, coef);
        int pos = rank_ - 1;
        while (pos >= 0) {
          auto& ip = idx[static_cast<std::size_t>(pos)];
          if (++ip < parts[static_cast<std::size_t>(pos)].size()) break;
          ip = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank_); ++i) {
    const int cu = cert_[i];
    r.cert_[i] = std::min({r.cert_[i],
                           is_exact_order(cu) ? kExactOrder : cu - o.xbound_[i], o.cert_[i]});
    r.cert_[i] = clamp_cert(r.cert_[i]);
    r.xbound_[i] = xbound_[i] + o.xbound_[i];
  }
  return r;
}

TensorElement TensorElement::commutator(const TensorElement& o) const {
  return *this * o - o * *this;
}

bool TensorElement::equal_up_to(const TensorElement& o, int k) const {
  auto in_box = [k](const TensorKey& key) {
    for (const auto& f : key.f)
      if (f.d_degree() > k) return false;
    return true;
  };
  for (const auto& [key, c] : terms_)
    if (in_box(key) && o.coeff(key) != c) return false;
  for (const auto& [key, c] : o.terms_)
    if (in_box(key) && coeff(key) != c) return false;
  return true;
}

namespace {

int total_d_degree(const TensorKey& key) {
  int d = 0;
  for (const auto& f : key.f) d += f.d_degree();
  return d;
}

}  // namespace

bool TensorElement::equal_up_to_total(const TensorElement& o, int k) const {
  for (const auto& [key, c] : terms_)
    if (total_d_degree(key) <= k && o.coeff(key) != c) return false;
  for (const auto& [key, c] : o.terms_)
    if (total_d_degree(key) <= k && coeff(key) != c) return false;
  return true;
}

std::string TensorElement::first_difference_total(const TensorElement& o, int k) const {
  for (const auto& [key, c] : terms_)
    if (total_d_degree(key) <= k && o.coeff(key) != c) {
      std::string s;
      for (const auto& f : key.f) s += (s.empty() ? "" : " \xE2\x8A\x97 ") + f.str();
      return s + ": " + c.str() + " vs " + o.coeff(key).str();
    }
  for (const auto& [key, c] : o.terms_)
    if (total_d_degree(key) <= k && coeff(key) != c) {
      std::string s;
      for (const auto& f : key.f) s += (s.empty() ? "" : " \xE2\x8A\x97 ") + f.str();
      return s + ": " + coeff(key).str() + " vs " + c.str();
    }
  return "";
}

TensorElement TensorElement::boxed(int k) const {
  TensorElement r(dim_, rank_, order_);
  for (const auto& [key, c] : terms_) {
    bool keep = true;
    for (const auto& f : key.f)
      if (f.d_degree() > k) keep = false;
    if (keep) r.terms_.emplace(key, c);
  }
  r.cert_ = cert_;
  r.xbound_ = xbound_;
  r.xcap_ = xcap_;
  return r;
}

TensorElement TensorElement::exp(int designated_factor) const {
  for (const auto& [k, c] : terms_)
    if (k.f[static_cast<std::size_t>(designated_factor)].d_degree() < 1)
      throw std::invalid_argument(
          "tensor exp: monomial with d-degree 0 in the convergence factor: " +
          k.f[static_cast<std::size_t>(designated_factor)].str());
  TensorElement acc = unit(dim_, rank_, order_);
  TensorElement pw = acc;
  const int cap = 2 * order_ + 16;
  for (int k = 1; k <= cap; ++k) {
    pw = pw * *this;
    if (pw.is_zero()) break;
    acc += pw * Rational::factorial(k).reciprocal();
    if (k == cap)
      throw std::runtime_error("tensor exp: series did not terminate at truncation");
  }
  return acc;
}

TensorElement TensorElement::s0_left() const {
  TensorElement r(dim_, rank_, order_);
  r.xcap_ = xcap_;
  const MultiIndex none(dim_);
  for (const auto& [k, c] : terms_) {
    const auto& left = k.f[0];
    const Rational sc = (left.d_degree() % 2 == 0) ? c : -c;
    for (const auto& [nk, f] : weyl_monomial_mul(WeylKey{none, left.d}, WeylKey{left.x, none})) {
      TensorKey key = k;
      key.f[0] = nk;
      r.add_term(key, sc * f);
    }
  }
  r.cert_ = cert_;
  r.cert_[0] = is_exact_order(cert_[0]) ? kExactOrder : clamp_cert(cert_[0] - xbound_[0]);
  r.xbound_ = xbound_;
  return r;
}

WeylElement TensorElement::contract() const {
  if (rank_ != 2) throw std::invalid_argument("contract: rank-2 only");
  WeylElement r(dim_, order_);
  for (const auto& [k, c] : terms_)
    for (const auto& [nk, f] : weyl_monomial_mul(k.f[0], k.f[1])) r.add_term(nk, c * f);
  const int c0 = cert_[0];
  r.set_cert(std::min(is_exact_order(c0) ? kExactOrder : c0 - xbound_[1], cert_[1]));
  return r;
}

WeylElement TensorElement::contract_all() const {
  if (rank_ != 3) throw std::invalid_argument("contract_all: rank-3 only");
  WeylElement r(dim_, order_);
  for (const auto& [k, c] : terms_)
    for (const auto& [nk01, f01] : weyl_monomial_mul(k.f[0], k.f[1]))
      for (const auto& [nk, f] : weyl_monomial_mul(nk01, k.f[2])) r.add_term(nk, c * f01 * f);
  r.set_cert(std::min({is_exact_order(cert_[0]) ? kExactOrder : cert_[0] - xbound_[1] - xbound_[2],
                       is_exact_order(cert_[1]) ? kExactOrder : cert_[1] - xbound_[2], cert_[2]}));
  return r;
}

TensorElement TensorElement::delta0_factor(int i) const {
  if (rank_ != 2) throw std::invalid_argument("delta0_factor: rank-2 input expected");
  if (i != 0 && i != 1) throw std::invalid_argument("delta0_factor: factor index out of range");
  TensorElement r(dim_, 3, order_);
  r.xcap_ = xcap_;
  for (const auto& [k, c] : terms_) {
    const WeylKey& fk = k.f[static_cast<std::size_t>(i)];
    MultiIndex split(dim_);
    do {
      const Rational f = multi_binomial(fk.d, split);
      TensorKey key;
      key.f.reserve(3);
      for (int j = 0; j < 2; ++j) {
        if (j == i) {
          key.f.push_back(WeylKey{fk.x, split});
          key.f.push_back(WeylKey{MultiIndex(dim_), fk.d - split});
        } else {
          key.f.push_back(k.f[static_cast<std::size_t>(j)]);
        }
      }
      r.add_term(key, c * f);
    } while (next_multi_below(split, fk.d));
  }
  // The two split slots inherit the split factor's bookkeeping; the second
  // split slot is pure momentum.
  if (i == 0) {
    r.cert_ = {cert_[0], cert_[0], cert_[1]};
    r.xbound_ = {xbound_[0], 0, xbound_[1]};
  } else {
    r.cert_ = {cert_[0], cert_[1], cert_[1]};
    r.xbound_ = {xbound_[0], xbound_[1], 0};
  }
  return r;
}

TensorElement TensorElement::embed_rank3(int position) const {
  if (rank_ != 2) throw std::invalid_argument("embed_rank3: rank-2 input expected");
  TensorElement r(dim_, 3, order_);
  r.xcap_ = xcap_;
  const WeylKey unit_key{MultiIndex(dim_), MultiIndex(dim_)};
  for (const auto& [k, c] : terms_) {
    TensorKey key;
    key.f.reserve(3);
    for (int j = 0, src = 0; j < 3; ++j) {
      if (j == position)
        key.f.push_back(unit_key);
      else
        key.f.push_back(k.f[static_cast<std::size_t>(src++)]);
    }
    r.terms_.emplace(std::move(key), c);
  }
  for (int j = 0, src = 0; j < 3; ++j) {
    if (j == position) {
      r.cert_[static_cast<std::size_t>(j)] = kExactOrder;
      r.xbound_[static_cast<std::size_t>(j)] = 0;
    } else {
      r.cert_[static_cast<std::size_t>(j)] = cert_[static_cast<std::size_t>(src)];
      r.xbound_[static_cast<std::size_t>(j)] = xbound_[static_cast<std::size_t>(src++)];
    }
  }
  return r;
}

std::string TensorElement::str() const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (const auto& f : k.f) {
      if (!mono.empty()) mono += " \xE2\x8A\x97 ";  // " ⊗ "
      mono += f.str();
    }
    parts.emplace_back(c, mono);
  }
  return detail::join_terms(parts);
}

TensorElement delta0_rep(const WeylElement& w) {
  TensorElement r(w.dim(), 2, w.order());
  for (const auto& [k, c] : w.terms()) {
    MultiIndex split(w.dim());
    do {
      r.add_term(TensorKey{{WeylKey{k.x, split}, WeylKey{MultiIndex(w.dim()), k.d - split}}},
                 c * multi_binomial(k.d, split));
    } while (next_multi_below(split, k.d));
  }
  r.cert_ = {w.cert(), w.cert(), kExactOrder};
  r.xbound_ = {w.xbound(), 0, 0};
  return r;
}

TensorElement hadamard_conj(const TensorElement& t, const TensorElement& a) {
  TensorElement acc = t;
  TensorElement cur = t;
  const int cap = 2 * t.order() + 16;
  for (int k = 1; k <= cap; ++k) {
    cur = a.commutator(cur);
    if (cur.is_zero()) break;
    acc += cur * Rational::factorial(k).reciprocal();
    if (k == cap)
      throw std::runtime_error("hadamard_conj: commutator series did not terminate");
  }
  return acc;
}

}  // namespace lietwist
