#include "lietwist/antipode.hpp"

#include <stdexcept>

namespace lietwist {

std::vector<MomentumSeries> build_Fmu(const RealizationContext& ctx) {
  const int n = ctx.dim();
  // div_gamma = d_rho (phi^rho_gamma), shared across mu.
  std::vector<MomentumSeries> div;
  div.reserve(static_cast<std::size_t>(n));
  for (int gamma = 0; gamma < n; ++gamma) {
    MomentumSeries acc(n, ctx.order);
    for (int rho = 0; rho < n; ++rho) acc += ctx.phi.at(rho, gamma).partial(rho);
    div.push_back(acc);
  }
  std::vector<MomentumSeries> f;
  f.reserve(static_cast<std::size_t>(n));
  for (int mu = 0; mu < n; ++mu) {
    MomentumSeries acc(n, ctx.order);
    for (int gamma = 0; gamma < n; ++gamma) acc += ctx.phiinv.at(gamma, mu) * div[static_cast<std::size_t>(gamma)];
    f.push_back(acc);
  }
  return f;
}

IntegrabilityReport check_integrability(const std::vector<MomentumSeries>& f_mu) {
  IntegrabilityReport rep;
  rep.verified_order = kExactOrder;
  const int n = static_cast<int>(f_mu.size());
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) {
      const MomentumSeries diff = f_mu[static_cast<std::size_t>(mu)].partial(nu) -
                                  f_mu[static_cast<std::size_t>(nu)].partial(mu);
      const int k = std::min(diff.cert(), diff.order());
      rep.verified_order = std::min(rep.verified_order, diff.cert());
      if (!diff.truncated(k).is_zero()) {
        rep.pass = false;
        rep.first_failure = "d_" + std::to_string(nu + 1) + " F_" + std::to_string(mu + 1) +
                            " - d_" + std::to_string(mu + 1) + " F_" + std::to_string(nu + 1) +
                            " = " + diff.str();
        return rep;
      }
    }
  return rep;
}

MomentumSeries solve_R(const std::vector<MomentumSeries>& f_mu, const RealizationContext& ctx) {
  const int n = ctx.dim();
  MomentumSeries euler(n, ctx.order);  // sum_mu d^mu F_mu
  int cert = kExactOrder;
  for (int mu = 0; mu < n; ++mu) {
    euler += MomentumSeries::generator(n, ctx.order, mu) * f_mu[static_cast<std::size_t>(mu)];
    cert = std::min(cert, f_mu[static_cast<std::size_t>(mu)].cert());
  }
  MomentumSeries r(n, ctx.order);
  for (int k = 1; k <= ctx.order; ++k) r += euler.homogeneous_part(k) * Rational(k).reciprocal();
  r.set_cert(std::min(is_exact_order(cert) ? kExactOrder : cert + 1, kExactOrder));

  // A posteriori: the homotopy solves the system only when it is integrable.
  const int check_order = std::min(r.cert() - 1, ctx.order - 1);
  for (int mu = 0; mu < n; ++mu) {
    const MomentumSeries diff = r.partial(mu) - f_mu[static_cast<std::size_t>(mu)];
    if (!diff.truncated(check_order).is_zero())
      throw std::runtime_error("solve_R: d_" + std::to_string(mu + 1) +
                               " R does not match F_" + std::to_string(mu + 1) +
                               " (integrability violated beyond the tested order): " + diff.str());
  }
  return r;
}

VFResult build_VF(const TwistForm& f, const RealizationContext& ctx) {
  VFResult out{f.rep.s0_left().contract(), true, "", MomentumSeries(ctx.dim(), ctx.order)};
  for (const auto& [k, c] : out.raw.terms())
    if (k.x_degree() > 0) {
      out.momentum_only = false;
      out.offending_term = c.str() + " * " + k.str();
      break;
    }
  if (out.momentum_only) {
    out.series = out.raw.to_momentum();
    if (!out.series.constant_term().is_one())
      throw std::runtime_error("build_VF: constant term " + out.series.constant_term().str() +
                               " (expected 1)");
    // Certified order of the contraction. For the exponential forms every x
    // in one factor is paired with a momentum generator of the opposite
    // factor, so a discarded term of d-degree > K reaches the contraction
    // only with at least matching d-degree left over: errors stay above the
    // working order. For the coproduct-series form each x carries total
    // d-degree >= 2 across the factors, which caps the reach of discarded
    // terms at (order+1)/2 instead.
    if (!is_exact_order(out.series.cert()))
      out.series.set_cert(f.tag == TwistFormTag::coproduct_series ? (ctx.order - 1) / 2
                                                                  : ctx.order);
  }
  return out;
}

ConjectureReport compare_conjecture(const MomentumSeries& r, const MomentumSeries& v_f,
                                    const std::vector<MomentumSeries>& f_mu,
                                    const RealizationContext& ctx) {
  ConjectureReport rep{v_f.log(), true, 0, std::nullopt, ""};
  const int n = ctx.dim();

  int cert = std::min(rep.r_f.cert(), r.cert());
  for (const auto& f : f_mu) cert = std::min(cert, f.cert());
  rep.compared_order = std::min(cert, ctx.order);

  for (int mu = 0; mu < n && rep.system_holds; ++mu) {
    const MomentumSeries diff = rep.r_f.partial(mu) - f_mu[static_cast<std::size_t>(mu)];
    const int k = std::min({diff.cert(), rep.compared_order - 1, diff.order()});
    if (!diff.truncated(k).is_zero()) {
      rep.system_holds = false;
      rep.detail = "d_" + std::to_string(mu + 1) + " R_F - F_" + std::to_string(mu + 1) + " = " +
                   diff.truncated(k).str();
    }
  }

  const MomentumSeries delta = rep.r_f - r;
  for (int d = 0; d <= rep.compared_order; ++d)
    if (!delta.homogeneous_part(d).is_zero()) {
      rep.first_divergence = d;
      if (rep.detail.empty())
        rep.detail = "R_F and R first differ in degree " + std::to_string(d) + ": " +
                     delta.homogeneous_part(d).str();
      break;
    }
  return rep;
}

WeylElement deformed_antipode(const WeylElement& h, const MomentumSeries& v,
                              const RealizationContext& ctx) {
  const MomentumSeries vv = v.with_order(ctx.order);
  const MomentumSeries vinv = (-vv.log()).exp();
  return WeylElement::from_momentum(vinv) * h.s0() * WeylElement::from_momentum(vv);
}

}  // namespace lietwist
