#ifndef LIETWIST_ANTIPODE_HPP
#define LIETWIST_ANTIPODE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lietwist/realization.hpp"
#include "lietwist/twist.hpp"

namespace lietwist {

/// The 1-form components F_mu = (phi^{-1})^gamma_mu d_rho phi^rho_gamma of
/// the antipode system d_mu R = F_mu.
std::vector<MomentumSeries> build_Fmu(const RealizationContext& ctx);

struct IntegrabilityReport {
  bool pass = true;
  int verified_order = 0;
  std::string first_failure;  // names (mu, nu) and the offending coefficient
};

/// Checks d_nu F_mu = d_mu F_nu for all pairs up to the certified order.
IntegrabilityReport check_integrability(const std::vector<MomentumSeries>& f_mu);

/// Degreewise Euler-homotopy solution of d_mu R = F_mu with R(0) = 0:
/// the degree-k part is (1/k) times the degree-k part of sum_mu d^mu F_mu.
/// Verifies the system a posteriori and throws when it fails.
MomentumSeries solve_R(const std::vector<MomentumSeries>& f_mu, const RealizationContext& ctx);

struct VFResult {
  WeylElement raw;            // mu(S0 (x) id) applied to the representative
  bool momentum_only = true;
  std::string offending_term;  // set when momentum-only fails
  MomentumSeries series;       // the momentum part, constant term 1
};

/// V_F = mu(S0 (x) id)(F) with the momentum-only assertion of the paper's
/// antipode section.
VFResult build_VF(const TwistForm& f, const RealizationContext& ctx);

struct ConjectureReport {
  MomentumSeries r_f;                   // log V_F
  bool system_holds = true;             // d_mu R_F = F_mu on the compared range
  int compared_order = 0;
  std::optional<int> first_divergence;  // lowest degree where R_F differs from R
  std::string detail;
};

/// Compares R_F = log(V_F) against the solved R, degree by degree.
ConjectureReport compare_conjecture(const MomentumSeries& r, const MomentumSeries& v_f,
                                    const std::vector<MomentumSeries>& f_mu,
                                    const RealizationContext& ctx);

/// The deformed antipode as conjugation S(h) = V^{-1} S0(h) V.
WeylElement deformed_antipode(const WeylElement& h, const MomentumSeries& v,
                              const RealizationContext& ctx);

}  // namespace lietwist

#endif  // LIETWIST_ANTIPODE_HPP
