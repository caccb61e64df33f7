#ifndef LIETWIST_REALIZATION_HPP
#define LIETWIST_REALIZATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lietwist/lie_algebra.hpp"
#include "lietwist/matrix_series.hpp"
#include "lietwist/pbw.hpp"
#include "lietwist/tensor.hpp"
#include "lietwist/weyl.hpp"

namespace lietwist {

/// Everything derived from one algebra at one working order: the matrix
/// ladder C, phi, phitilde, O and inverses, the realized generators
/// xhat/yhat, and the shared PBW engine. Immutable after construction apart
/// from interior memo caches.
struct RealizationContext {
  LieAlgebraDef alg;
  int order;  // working truncation order

  MatrixSeries C, phi, phitilde, O, Oinv, phiinv, phitildeinv;
  std::vector<WeylElement> xhat, yhat;

  std::shared_ptr<PBWEngine> pbw;
  std::shared_ptr<std::map<MultiIndex, WeylElement>> realize_memo;

  int dim() const { return alg.dim(); }

  WeylElement weyl_zero() const { return WeylElement::zero(dim(), order); }
  WeylElement weyl_one() const { return WeylElement::one(dim(), order); }
  WeylElement x(int i) const { return WeylElement::x_gen(dim(), order, i); }
  WeylElement d(int i) const { return WeylElement::d_gen(dim(), order, i); }
  MomentumSeries momentum_gen(int i) const { return MomentumSeries::generator(dim(), order, i); }

  /// sum_rho d^rho (x) x_rho and friends, the exponents of the twists.
  TensorElement d_tensor_x() const;
  TensorElement d_tensor_xhat() const;
  TensorElement x_tensor_d() const;
  TensorElement yhat_tensor_d() const;
};

/// phi-type Bernoulli series of a matrix with zero constant term:
/// sum_N B_N/N! (-M)^N for the phi convention (flip = true gives
/// sum_N B_N/N! M^N, the phitilde convention).
MatrixSeries bernoulli_matrix_series(const MatrixSeries& m, bool tilde);

/// Builds the full context; validates the algebra and requires order >= 1.
RealizationContext build_context(const LieAlgebraDef& alg, int order);

/// The algebra map U(g) -> A^_n determined by X_rho -> xhat_rho.
WeylElement realize(const PBWElement& u, const RealizationContext& ctx);

/// beta on PBW coordinates: the antihomomorphism X_rho -> yhat_rho
/// (products taken in reversed order).
WeylElement target_map(const PBWElement& u, const RealizationContext& ctx);

struct CommutatorReport {
  bool pass = true;
  int verified_order = 0;             // minimum certified order over all pairs
  std::string first_failure;          // empty when pass
};

/// Computes all n^2 commutators [xhat_a, yhat_b] and reports whether every
/// one vanishes to its certified order.
CommutatorReport check_xy_commute(const RealizationContext& ctx);

/// Coordinates of W in the smash product: W = sum_b realize(xi(f_b)) d^b,
/// found by d-degree-ascending triangular elimination.
std::vector<std::pair<Polynomial, MultiIndex>> decompose_smash(const WeylElement& w,
                                                               const RealizationContext& ctx);
WeylElement recompose_smash(const std::vector<std::pair<Polynomial, MultiIndex>>& parts,
                            const RealizationContext& ctx);

}  // namespace lietwist

#endif  // LIETWIST_REALIZATION_HPP
