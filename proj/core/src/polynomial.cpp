#include "lietwist/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "text_util.hpp"

namespace lietwist {

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(MultiIndex(dim), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int i) {
  Polynomial p(dim);
  p.add_term(MultiIndex::unit(dim, i), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& m, const Rational& c) {
  Polynomial p(m.dim());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(dim_);
  if (!c.is_zero())
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(dim_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma + mb, ca * cb);
  return r;
}

Polynomial Polynomial::partial(int i) const {
  Polynomial r(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    MultiIndex d = m;
    d.bump(i, -1);
    r.add_term(d, c * Rational(m[i]));
  }
  return r;
}

std::string Polynomial::str_with_stem(const char* stem) const {
  std::vector<std::pair<Rational, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += detail::power_str(stem, i, m[i]);
    }
    parts.emplace_back(c, mono);
  }
  // Compact form: no spaces around '*' inside a term.
  std::string s = detail::join_terms(parts);
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == ' ' && i + 1 < s.size() && s[i + 1] == '*') continue;
    if (s[i] == ' ' && i > 0 && s[i - 1] == '*') continue;
    out += s[i];
  }
  return out;
}

std::string Polynomial::str() const { return str_with_stem("x"); }

namespace {

struct Lexer {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return s[i];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial '" + s + "': " + what + " at position " +
                                std::to_string(i));
  }
  long read_int() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number");
    return std::stol(s.substr(start, i - start));
  }
};

}  // namespace

Polynomial Polynomial::parse(int dim, const std::string& text) {
  Polynomial out(dim);
  Lexer lx{text};
  bool first = true;
  while (!lx.eof()) {
    if (!first) {
      char c = lx.peek();
      if (c != '+' && c != '-') lx.fail("expected '+' or '-'");
    }
    Rational sign(1);
    while (!lx.eof() && (lx.peek() == '+' || lx.peek() == '-')) {
      if (lx.peek() == '-') sign = -sign;
      ++lx.i;
    }
    Rational coef = sign;
    MultiIndex mono(dim);
    bool saw_factor = false;
    for (;;) {
      if (!lx.eof() && std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        long num = lx.read_int();
        Rational f(num);
        if (!lx.eof() && lx.peek() == '/') {
          ++lx.i;
          long den = lx.read_int();
          if (den == 0) lx.fail("zero denominator");
          f = Rational(num, 1) / Rational(den);
        }
        coef *= f;
        saw_factor = true;
      } else if (!lx.eof() && lx.peek() == 'x') {
        ++lx.i;
        long var = lx.read_int();
        if (var < 1 || var > dim) lx.fail("variable index out of range 1.." + std::to_string(dim));
        long exp = 1;
        if (!lx.eof() && lx.peek() == '^') {
          ++lx.i;
          exp = lx.read_int();
        }
        mono.bump(static_cast<int>(var - 1), static_cast<int>(exp));
        saw_factor = true;
      } else {
        break;
      }
      if (!lx.eof() && lx.peek() == '*') {
        ++lx.i;
        continue;
      }
      // Juxtaposition with whitespace is also accepted.
      if (!lx.eof() && (lx.peek() == 'x' || std::isdigit(static_cast<unsigned char>(lx.peek()))))
        continue;
      break;
    }
    if (!saw_factor) lx.fail("expected a term");
    out.add_term(mono, coef);
    first = false;
  }
  if (first) lx.fail("empty input");
  return out;
}

}  // namespace lietwist
