#ifndef LIETWIST_BIALGEBROID_HPP
#define LIETWIST_BIALGEBROID_HPP

#include <optional>
#include <string>
#include <vector>

#include "lietwist/realization.hpp"

namespace lietwist {

enum class IdealKind { undeformed, deformed };

struct MembershipWitness {
  std::vector<std::string> arguments;  // the monomial tuple that detected it
  std::string value;                   // the nonzero product
};

struct MembershipResult {
  bool member = false;
  std::optional<MembershipWitness> witness;
};

/// Right-ideal membership through the faithful-action oracle: t lies in the
/// kernel of H(x)...(x)H -> H(x)_A...(x)_A H iff applying the factors to every
/// argument tuple and multiplying gives zero. Undeformed: Fock action on
/// x-monomials with multiplication in S(g); deformed: transported action on
/// PBW monomials with multiplication in U(g). Tested on all tuples of total
/// degree <= test_degree.
///
/// Terms with any factor d-degree above test_degree act as zero on the whole
/// grid, so the oracle value is a function of the corresponding degree box.
MembershipResult ideal_member(const TensorElement& t, IdealKind kind, int test_degree,
                              const RealizationContext& ctx);

/// ideal_member(a - b).
MembershipResult coset_equal(const TensorElement& a, const TensorElement& b, IdealKind kind,
                             int test_degree, const RealizationContext& ctx);

/// Generators of the right ideals (rank 2): undeformed x_mu (x) 1 - 1 (x) x_mu;
/// deformed xhat_rho (x) 1 - O^tau_rho (x) xhat_tau.
std::vector<TensorElement> ideal_generators(IdealKind kind, const RealizationContext& ctx);

/// Deformed coproduct of a momentum series, computed as the nested-commutator
/// series exp(ad(-d^a (x) xhat_a))(1 (x) P). The result is a pure
/// momentum (x) momentum tensor; a non-momentum residue throws.
TensorElement delta_deformed_left(const MomentumSeries& p, const RealizationContext& ctx);

/// Mirror formula exp(ad(-yhat_a (x) d^a))(P (x) 1); must agree with
/// delta_deformed_left exactly as momentum tensors.
TensorElement delta_deformed_right(const MomentumSeries& p, const RealizationContext& ctx);

/// Representative of Delta_H(W): decompose W = sum_b realize(xi(f_b)) d^b and
/// return sum_b (realize(xi(f_b)) (x) 1) Delta(d^b). Coset semantics enter
/// only through the membership oracle.
TensorElement delta_H_rep(const WeylElement& w, const RealizationContext& ctx);

/// Undeformed counit h |-> h acting on 1.
Polynomial counit0(const WeylElement& w);
/// Deformed counit h |-> xi(h acting on 1), valued in U(g).
PBWElement counit_def(const WeylElement& w, const RealizationContext& ctx);

/// Source map alpha(u) = realize(u). (The target map lives in realization.hpp.)
WeylElement source_map(const PBWElement& u, const RealizationContext& ctx);

}  // namespace lietwist

#endif  // LIETWIST_BIALGEBROID_HPP
