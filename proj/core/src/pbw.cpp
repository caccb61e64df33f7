#include "lietwist/pbw.hpp"

#include <algorithm>
#include <stdexcept>

namespace lietwist {

PBWElement PBWElement::constant(int dim, const Rational& c) {
  PBWElement u(dim);
  u.add_term(MultiIndex(dim), c);
  return u;
}

PBWElement PBWElement::generator(int dim, int i) {
  PBWElement u(dim);
  u.add_term(MultiIndex::unit(dim, i), Rational(1));
  return u;
}

PBWElement PBWElement::monomial(const MultiIndex& m, const Rational& c) {
  PBWElement u(m.dim());
  u.add_term(m, c);
  return u;
}

Rational PBWElement::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWElement::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PBWElement PBWElement::operator*(const Rational& c) const {
  PBWElement r(dim_);
  if (!c.is_zero())
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

std::string PBWElement::str() const {
  Polynomial p(dim_);
  for (const auto& [m, c] : terms_) p.add_term(m, c);
  return p.str_with_stem("X");
}

namespace {

std::vector<int> word_of(const MultiIndex& m) {
  std::vector<int> w;
  for (int i = 0; i < m.dim(); ++i)
    for (int k = 0; k < m[i]; ++k) w.push_back(i);
  return w;
}

MultiIndex exponents_of(int dim, const std::vector<int>& sorted_word) {
  MultiIndex m(dim);
  for (int letter : sorted_word) m.bump(letter, 1);
  return m;
}

}  // namespace

PBWEngine::PBWEngine(LieAlgebraDef alg) : alg_(std::move(alg)) {}

// Rightmost-inversion-first rewriting with memoization keyed by the word.
// Each rewrite either shortens the word or lowers its inversion count, so the
// recursion terminates; confluence follows from the Jacobi identity validated
// upstream.
PBWElement PBWEngine::straighten(const std::vector<int>& word) {
  auto it = word_memo_.find(word);
  if (it != word_memo_.end()) return it->second;

  int inv = -1;
  for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
    if (word[static_cast<std::size_t>(i)] > word[static_cast<std::size_t>(i + 1)]) {
      inv = i;
      break;
    }

  PBWElement result(alg_.dim());
  if (inv < 0) {
    result.add_term(exponents_of(alg_.dim(), word), Rational(1));
  } else {
    const int nu = word[static_cast<std::size_t>(inv)];
    const int mu = word[static_cast<std::size_t>(inv + 1)];
    std::vector<int> swapped = word;
    std::swap(swapped[static_cast<std::size_t>(inv)], swapped[static_cast<std::size_t>(inv + 1)]);
    result = straighten(swapped);
    // X_nu X_mu = X_mu X_nu + C^lambda_{nu mu} X_lambda
    for (int lambda = 0; lambda < alg_.dim(); ++lambda) {
      const Rational c = alg_.c(lambda, nu, mu);
      if (c.is_zero()) continue;
      std::vector<int> contracted;
      contracted.reserve(word.size() - 1);
      for (int i = 0; i < static_cast<int>(word.size()); ++i) {
        if (i == inv) contracted.push_back(lambda);
        if (i != inv && i != inv + 1) contracted.push_back(word[static_cast<std::size_t>(i)]);
      }
      result += straighten(contracted) * c;
    }
  }
  word_memo_.emplace(word, result);
  return result;
}

PBWElement PBWEngine::mul(const PBWElement& u, const PBWElement& v) {
  if (u.dim() != alg_.dim() || v.dim() != alg_.dim())
    throw std::invalid_argument("PBWEngine: dimension mismatch");
  PBWElement r(alg_.dim());
  for (const auto& [ma, ca] : u.terms()) {
    const auto wa = word_of(ma);
    for (const auto& [mb, cb] : v.terms()) {
      std::vector<int> w = wa;
      const auto wb = word_of(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      r += straighten(w) * (ca * cb);
    }
  }
  return r;
}

PBWElement PBWEngine::mul(const PBWElement& u, const PBWElement& v, const PBWElement& w) {
  return mul(mul(u, v), w);
}

const PBWElement& PBWEngine::xi_monomial(const MultiIndex& m) {
  auto it = xi_memo_.find(m);
  if (it != xi_memo_.end()) return it->second;

  // Full symmetrization: (prod a_i!)/r! times the sum over the distinct
  // orderings of the word.
  std::vector<int> w = word_of(m);
  PBWElement sum(alg_.dim());
  std::sort(w.begin(), w.end());
  do {
    sum += straighten(w);
  } while (std::next_permutation(w.begin(), w.end()));
  const Rational scale = m.factorial() / Rational::factorial(m.degree());
  return xi_memo_.emplace(m, sum * scale).first->second;
}

PBWElement PBWEngine::xi(const Polynomial& f) {
  PBWElement r(alg_.dim());
  for (const auto& [m, c] : f.terms()) r += xi_monomial(m) * c;
  return r;
}

Polynomial PBWEngine::xi_inv(const PBWElement& u) {
  Polynomial f(alg_.dim());
  PBWElement rest = u;
  while (!rest.is_zero()) {
    // Leading PBW monomial in graded-lex order; xi(x^m) = X^m + lower degree,
    // so eliminating from the top terminates.
    const auto lead = std::prev(rest.terms().end());
    const MultiIndex m = lead->first;
    const Rational c = lead->second;
    f.add_term(m, c);
    rest -= xi_monomial(m) * c;
  }
  return f;
}

Polynomial PBWEngine::star(const Polynomial& f, const Polynomial& g) {
  return xi_inv(mul(xi(f), xi(g)));
}

PBWElement PBWEngine::deformed_act(const WeylElement& w, const PBWElement& u) {
  return xi(w.fock_act(xi_inv(u)));
}

}  // namespace lietwist
