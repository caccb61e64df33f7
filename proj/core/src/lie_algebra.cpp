#include "lietwist/lie_algebra.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lietwist {

using nlohmann::json;

LieAlgebraDef::LieAlgebraDef(std::string name, int dim) : name_(std::move(name)), dim_(dim) {
  if (dim < 1) throw std::invalid_argument("LieAlgebraDef: dim must be >= 1");
}

Rational LieAlgebraDef::c(int lambda, int mu, int nu) const {
  auto it = c_.find({lambda, mu, nu});
  return it == c_.end() ? Rational(0) : it->second;
}

void LieAlgebraDef::set_c(int lambda, int mu, int nu, const Rational& v) {
  if (lambda < 0 || lambda >= dim_ || mu < 0 || mu >= dim_ || nu < 0 || nu >= dim_)
    throw std::invalid_argument("LieAlgebraDef: structure constant index out of range");
  if (v.is_zero())
    c_.erase({lambda, mu, nu});
  else
    c_[{lambda, mu, nu}] = v;
}

void LieAlgebraDef::set_bracket(int lambda, int mu, int nu, const Rational& v) {
  set_c(lambda, mu, nu, v);
  set_c(lambda, nu, mu, -v);
}

std::optional<LieValidationIssue> validate(const LieAlgebraDef& def) {
  const int n = def.dim();
  for (int l = 0; l < n; ++l)
    for (int mu = 0; mu < n; ++mu)
      for (int nu = mu; nu < n; ++nu)
        if (def.c(l, mu, nu) != -def.c(l, nu, mu)) {
          LieValidationIssue issue;
          issue.kind = LieValidationIssue::Kind::antisymmetry;
          issue.indices = {l + 1, mu + 1, nu + 1, 0};
          issue.detail = "C^" + std::to_string(l + 1) + "_{" + std::to_string(mu + 1) + "," +
                         std::to_string(nu + 1) + "} != -C^" + std::to_string(l + 1) + "_{" +
                         std::to_string(nu + 1) + "," + std::to_string(mu + 1) + "}";
          return issue;
        }
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu)
      for (int tau = 0; tau < n; ++tau)
        for (int sigma = 0; sigma < n; ++sigma) {
          Rational acc(0);
          for (int rho = 0; rho < n; ++rho) {
            acc += def.c(rho, mu, nu) * def.c(sigma, rho, tau);
            acc += def.c(rho, nu, tau) * def.c(sigma, rho, mu);
            acc += def.c(rho, tau, mu) * def.c(sigma, rho, nu);
          }
          if (!acc.is_zero()) {
            LieValidationIssue issue;
            issue.kind = LieValidationIssue::Kind::jacobi;
            issue.indices = {mu + 1, nu + 1, tau + 1, sigma + 1};
            issue.detail = "Jacobi sum at (mu,nu,tau,sigma) = (" + std::to_string(mu + 1) + "," +
                           std::to_string(nu + 1) + "," + std::to_string(tau + 1) + "," +
                           std::to_string(sigma + 1) + ") equals " + acc.str();
            return issue;
          }
        }
  return std::nullopt;
}

namespace {

// Parses "base(n)" style catalog names; returns n or -1 on mismatch.
int parse_parenthesized(const std::string& name, const std::string& base) {
  if (name.size() < base.size() + 3 || name.compare(0, base.size(), base) != 0) return -1;
  if (name[base.size()] != '(' || name.back() != ')') return -1;
  const std::string inner = name.substr(base.size() + 1, name.size() - base.size() - 2);
  if (inner.empty()) return -1;
  for (char ch : inner)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return -1;
  return std::stoi(inner);
}

}  // namespace

LieAlgebraDef catalog(const std::string& name) {
  if (int n = parse_parenthesized(name, "abelian"); n > 0) {
    return LieAlgebraDef(name, n);
  }
  if (name == "heisenberg3") {
    LieAlgebraDef def(name, 3);
    def.set_bracket(2, 0, 1, Rational(1));  // [x1, x2] = x3
    return def;
  }
  if (name == "su2") {
    LieAlgebraDef def(name, 3);
    def.set_bracket(2, 0, 1, Rational(1));  // [x1, x2] = x3
    def.set_bracket(0, 1, 2, Rational(1));  // [x2, x3] = x1
    def.set_bracket(1, 2, 0, Rational(1));  // [x3, x1] = x2
    return def;
  }
  if (int n = parse_parenthesized(name, "kappa"); n > 0) {
    if (n < 2) throw std::invalid_argument("catalog: kappa(n) requires n >= 2");
    LieAlgebraDef def(name, n);
    for (int i = 1; i < n; ++i) def.set_bracket(i, 0, i, Rational(1));  // [x0, xi] = xi
    return def;
  }
  throw std::invalid_argument("catalog: unknown algebra '" + name + "'");
}

LieAlgebraDef load_algebra_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("algebra file: JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("algebra file: top level must be an object");
  for (const char* key : {"name", "dim", "antisymmetrize", "C"})
    if (!doc.contains(key))
      throw std::invalid_argument(std::string("algebra file: missing field '") + key + "'");
  if (!doc["name"].is_string() || !doc["dim"].is_number_integer() ||
      !doc["antisymmetrize"].is_boolean() || !doc["C"].is_array())
    throw std::invalid_argument("algebra file: field has wrong type");

  const int dim = doc["dim"].get<int>();
  LieAlgebraDef def(doc["name"].get<std::string>(), dim);
  const bool antisym = doc["antisymmetrize"].get<bool>();

  int row = 0;
  for (const auto& entry : doc["C"]) {
    ++row;
    if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer() || !entry[3].is_string())
      throw std::invalid_argument("algebra file: C entry " + std::to_string(row) +
                                  " must be [lambda, mu, nu, \"p/q\"]");
    const int l = entry[0].get<int>() - 1;
    const int mu = entry[1].get<int>() - 1;
    const int nu = entry[2].get<int>() - 1;
    if (l < 0 || l >= dim || mu < 0 || mu >= dim || nu < 0 || nu >= dim)
      throw std::invalid_argument("algebra file: C entry " + std::to_string(row) +
                                  " has an index out of range 1.." + std::to_string(dim));
    Rational v;
    try {
      v = Rational::parse(entry[3].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("algebra file: C entry " + std::to_string(row) + ": " + e.what());
    }
    if (antisym) {
      if (mu == nu)
        throw std::invalid_argument("algebra file: C entry " + std::to_string(row) +
                                    " has mu == nu under antisymmetrize");
      def.set_bracket(l, mu, nu, v);
    } else {
      def.set_c(l, mu, nu, v);
    }
  }

  if (auto issue = validate(def))
    throw std::invalid_argument("algebra file: validation failed: " + issue->detail);
  return def;
}

LieAlgebraDef load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("algebra file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_algebra_text(ss.str());
}

std::string serialize_algebra(const LieAlgebraDef& def) {
  json doc;
  doc["name"] = def.name();
  doc["dim"] = def.dim();
  doc["antisymmetrize"] = true;
  json entries = json::array();
  for (const auto& [idx, v] : def.constants()) {
    const auto [l, mu, nu] = std::array{idx[0], idx[1], idx[2]};
    if (mu < nu) entries.push_back(json::array({l + 1, mu + 1, nu + 1, v.str()}));
  }
  doc["C"] = entries;
  return doc.dump(2) + "\n";
}

}  // namespace lietwist
