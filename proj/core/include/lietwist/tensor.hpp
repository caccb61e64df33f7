#ifndef LIETWIST_TENSOR_HPP
#define LIETWIST_TENSOR_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lietwist/momentum_series.hpp"
#include "lietwist/weyl.hpp"

namespace lietwist {

/// Key of a rank-2 or rank-3 tensor term: one normally ordered Weyl monomial
/// per factor.
struct TensorKey {
  std::vector<WeylKey> f;

  int rank() const { return static_cast<int>(f.size()); }
  int total_degree() const;

  friend bool operator==(const TensorKey& a, const TensorKey& b) { return a.f == b.f; }
  friend bool operator<(const TensorKey& a, const TensorKey& b);
};

/// Truncated element of H (x) H or H (x) H (x) H over the ground field, the
/// carrier for coproduct values, twists and cocycle sides. Factors are
/// truncated independently in d-degree at the shared working order.
class TensorElement {
 public:
  TensorElement(int dim, int rank, int order);

  static TensorElement unit(int dim, int rank, int order);
  /// Outer product of rank-1 elements (rank = number of arguments).
  static TensorElement outer(const WeylElement& a, const WeylElement& b);
  static TensorElement outer(const WeylElement& a, const WeylElement& b, const WeylElement& c);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  int order() const { return order_; }
  int cert(int factor) const { return cert_[static_cast<std::size_t>(factor)]; }
  int xbound(int factor) const { return xbound_[static_cast<std::size_t>(factor)]; }

  bool is_zero() const { return terms_.empty(); }
  const std::map<TensorKey, Rational>& terms() const { return terms_; }
  Rational coeff(const TensorKey& k) const;
  Rational unit_coefficient() const;
  void add_term(const TensorKey& k, const Rational& c);
  /// Bookkeeping annotation for construction sites that assemble an element
  /// termwise and know its provenance better than the generic rules.
  void set_factor_cert(int factor, int cert);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  TensorElement operator-() const;
  TensorElement operator*(const Rational& c) const;
  /// Factorwise product over the ground field.
  TensorElement operator*(const TensorElement& o) const;

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  /// Agreement of all stored terms whose factor d-degrees are all <= k.
  bool equal_up_to(const TensorElement& o, int k) const;
  /// Agreement of all stored terms whose total d-degree (sum over factors)
  /// is <= k.
  bool equal_up_to_total(const TensorElement& o, int k) const;
  /// First differing term within the total-degree window, rendered for
  /// reports; empty when none.
  std::string first_difference_total(const TensorElement& o, int k) const;

  TensorElement commutator(const TensorElement& o) const;

  /// Drops terms with any factor d-degree above k (bookkeeping helper for
  /// consumers that only read a degree box).
  TensorElement boxed(int k) const;

  /// exp(X) = sum X^k / k!; requires every monomial of X to have d-degree
  /// >= 1 in the designated factor so that powers vanish at truncation.
  TensorElement exp(int designated_factor) const;

  /// Applies the undeformed antipode S0 to the left factor of every term.
  TensorElement s0_left() const;

  /// Multiplies the factors of each term in order and sums (rank 2).
  WeylElement contract() const;
  /// mu_2: multiplies all three factors in order and sums (rank 3).
  WeylElement contract_all() const;

  /// Replaces factor i by its undeformed-coproduct representative, raising
  /// the rank by one: x^a d^b -> sum_k binom(b,k) x^a d^k (x) d^(b-k).
  TensorElement delta0_factor(int i) const;

  /// Embeds a rank-2 element into rank 3 with a unit factor at `position`
  /// (0 gives 1 (x) F, 2 gives F (x) 1).
  TensorElement embed_rank3(int position) const;

  std::string str() const;

 private:
  int dim_;
  int rank_;
  int order_;
  std::array<int, 3> cert_;
  std::array<int, 3> xbound_;
  int xcap_;
  std::map<TensorKey, Rational> terms_;

  void require_compatible(const TensorElement& o) const;
  friend TensorElement delta0_rep(const WeylElement& w);
};

/// The undeformed coproduct representative of a Weyl element, with x's
/// placed in the left factor.
TensorElement delta0_rep(const WeylElement& w);

/// exp(ad A)(T) = exp(A) T exp(-A) computed as the iterated-commutator
/// series; terminates because each bracket with A raises the minimal
/// d-degree of some factor.
TensorElement hadamard_conj(const TensorElement& t, const TensorElement& a);

/// Product restricted to the output box of per-factor d-degree <= cap, for
/// consumers (the action oracle) that never read beyond it. Terms of b with
/// a factor above the cap only raise degrees further and are dropped; terms
/// of a are dropped when even full contraction against b's x's cannot bring
/// them back into the box.
TensorElement mul_boxed(const TensorElement& a, const TensorElement& b, int cap);

}  // namespace lietwist

#endif  // LIETWIST_TENSOR_HPP
