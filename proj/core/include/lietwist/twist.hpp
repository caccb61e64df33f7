#ifndef LIETWIST_TWIST_HPP
#define LIETWIST_TWIST_HPP

#include <optional>
#include <string>

#include "lietwist/bialgebroid.hpp"
#include "lietwist/realization.hpp"

namespace lietwist {

enum class TwistFormTag { left, right, coproduct_series };

std::string twist_form_name(TwistFormTag tag);
TwistFormTag twist_form_from_string(const std::string& s);  // "l" | "r" | "c"

/// A twist with its explicit representative and inverse representative in
/// H (x) H. For the left and right forms both are products of two tensor
/// exponentials; for the coproduct-series form the inverse is obtained by
/// geometric series inversion (expensive at high orders, hence optional).
struct TwistForm {
  TwistFormTag tag;
  TensorElement rep;
  std::optional<TensorElement> inv;

  const TensorElement& inverse() const;
};

TwistForm build_twist(TwistFormTag tag, const RealizationContext& ctx, bool with_inverse = true);

/// F^{-1} T F on representatives. The exponential forms go through nested
/// Hadamard commutator series; the coproduct-series form multiplies
/// explicitly.
TensorElement twist_conjugate(const TwistForm& f, const TensorElement& t,
                              const RealizationContext& ctx);

/// The twisted star product a*b = mu F((F1 act a) (x) (F2 act b)).
Polynomial twisted_star(const TwistForm& f, const Polynomial& a, const Polynomial& b,
                        const RealizationContext& ctx);

/// (eps (x) 1)F and (1 (x) eps)F; both must be the unit.
std::pair<WeylElement, WeylElement> counitality_sides(const TwistForm& f,
                                                      const RealizationContext& ctx);

/// alpha_F(x_mu) and beta_F(x_mu) computed from the twist.
WeylElement twisted_source(const TwistForm& f, int mu, const RealizationContext& ctx);
WeylElement twisted_target(const TwistForm& f, int mu, const RealizationContext& ctx);

/// Both sides of the 2-cocycle identity as rank-3 tensors built with the
/// undeformed coproduct representative.
std::pair<TensorElement, TensorElement> cocycle_sides(const TwistForm& f);
/// The inverse-cocycle variant built from F^{-1}.
std::pair<TensorElement, TensorElement> inverse_cocycle_sides(const TwistForm& f);

/// Closed forms of the conjugated undeformed-ideal generator
/// F^{-1}(x_mu (x) 1 - 1 (x) x_mu)F from the structure matrices.
TensorElement ideal_conjugation_closed_form(TwistFormTag tag, int mu,
                                            const RealizationContext& ctx);

}  // namespace lietwist

#endif  // LIETWIST_TWIST_HPP
