#ifndef LIETWIST_VERIFY_HPP
#define LIETWIST_VERIFY_HPP

#include "lietwist/antipode.hpp"
#include "lietwist/bialgebroid.hpp"
#include "lietwist/lie_algebra.hpp"
#include "lietwist/report.hpp"
#include "lietwist/twist.hpp"

namespace lietwist {

struct VerifyConfig {
  int order = 4;        // report order K; contexts run at K + test_degree
  int test_degree = 3;  // ideal-oracle degree D
  int cocycle_order = 3;
  int cocycle_degree = 2;
  unsigned long seed = 0;
  bool with_fc = true;  // build F_c and include it in the cross-checks
};

/// Runs the full verification pipeline on one algebra.
Report run_verify(const LieAlgebraDef& alg, const VerifyConfig& cfg);

// Individual sections, exposed for the CLI subcommands and the tests.
CheckSection section_phi_series(const RealizationContext& ctx, int report_order);
CheckSection section_realization(const RealizationContext& ctx, int report_order);
CheckSection section_coproduct(const RealizationContext& ctx, int report_order);
CheckSection section_smash(const RealizationContext& ctx, int report_order, unsigned long seed);
CheckSection section_counit(const RealizationContext& ctx, int report_order);
CheckSection section_source_target(const RealizationContext& ctx, int report_order);
CheckSection section_twist_build(const TwistForm& f, const RealizationContext& ctx,
                                 int report_order);
CheckSection section_twist_equation(const TwistForm& f, const RealizationContext& ctx,
                                    int report_order, int test_degree);
CheckSection section_counitality(const TwistForm& f, const RealizationContext& ctx,
                                 int report_order);
CheckSection section_twisted_star(const TwistForm& f, const RealizationContext& ctx,
                                  int report_order);
CheckSection section_source_target_twisted(const TwistForm& f, const RealizationContext& ctx,
                                           int report_order);
CheckSection section_ideal_mapping(const TwistForm& f, const RealizationContext& ctx,
                                   int report_order, int test_degree);
CheckSection section_cocycle(TwistFormTag tag, const LieAlgebraDef& alg, int order,
                             int test_degree);
CheckSection section_twist_agreement(const TwistForm& fl, const TwistForm& fr,
                                     const TwistForm* fc, const RealizationContext& ctx,
                                     int report_order, int test_degree);
CheckSection section_twist_agreement_deformed(const TwistForm& fl, const TwistForm& fr,
                                              const TwistForm* fc, const RealizationContext& ctx,
                                              int report_order, int test_degree);
CheckSection section_antipode(const RealizationContext& ctx, const TwistForm& fl,
                              const TwistForm& fr, const TwistForm* fc, int report_order,
                              int test_degree);
CheckSection section_conjecture(const RealizationContext& ctx, const TwistForm& fl,
                                int report_order);

}  // namespace lietwist

#endif  // LIETWIST_VERIFY_HPP
