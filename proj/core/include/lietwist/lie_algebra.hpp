#ifndef LIETWIST_LIE_ALGEBRA_HPP
#define LIETWIST_LIE_ALGEBRA_HPP

#include <array>
#include <map>
#include <optional>
#include <string>

#include "lietwist/rational.hpp"

namespace lietwist {

/// First antisymmetry or Jacobi violation found by validate(); indices are
/// 1-based as in files and reports.
struct LieValidationIssue {
  enum class Kind { antisymmetry, jacobi } kind;
  std::array<int, 4> indices{};  // (lambda, mu, nu, -) or (mu, nu, tau, sigma)
  std::string detail;
};

/// A finite-dimensional Lie algebra given by exact structure constants
/// C^lambda_{mu nu} with respect to a fixed basis. Indices are 0-based
/// internally; file I/O and reports use 1-based indices.
class LieAlgebraDef {
 public:
  LieAlgebraDef(std::string name, int dim);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }

  Rational c(int lambda, int mu, int nu) const;
  /// Sets C^lambda_{mu nu} (and nothing else; callers maintain antisymmetry).
  void set_c(int lambda, int mu, int nu, const Rational& v);
  /// Sets C^lambda_{mu nu} = v and C^lambda_{nu mu} = -v.
  void set_bracket(int lambda, int mu, int nu, const Rational& v);

  const std::map<std::array<int, 3>, Rational>& constants() const { return c_; }

  friend bool operator==(const LieAlgebraDef& a, const LieAlgebraDef& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::string name_;
  int dim_;
  std::map<std::array<int, 3>, Rational> c_;
};

/// Exact antisymmetry and Jacobi check; nullopt means valid.
std::optional<LieValidationIssue> validate(const LieAlgebraDef& def);

/// Built-in algebras: abelian(n), heisenberg3, su2, kappa(n).
/// Throws std::invalid_argument for unknown names.
LieAlgebraDef catalog(const std::string& name);

/// Parses the JSON algebra file format
///   {"name": str, "dim": int, "antisymmetrize": bool, "C": [[l,mu,nu,"p/q"],...]}
/// with 1-based indices. The parsed definition is validated before returning.
LieAlgebraDef load_algebra_text(const std::string& text);
LieAlgebraDef load_algebra_file(const std::string& path);

/// Serializes in the same file format, storing only mu < nu entries with
/// antisymmetrize = true.
std::string serialize_algebra(const LieAlgebraDef& def);

}  // namespace lietwist

#endif  // LIETWIST_LIE_ALGEBRA_HPP
