#include "lietwist/twist.hpp"

#include <stdexcept>

namespace lietwist {

std::string twist_form_name(TwistFormTag tag) {
  switch (tag) {
    case TwistFormTag::left: return "F_l";
    case TwistFormTag::right: return "F_r";
    case TwistFormTag::coproduct_series: return "F_c";
  }
  return "?";
}

TwistFormTag twist_form_from_string(const std::string& s) {
  if (s == "l") return TwistFormTag::left;
  if (s == "r") return TwistFormTag::right;
  if (s == "c") return TwistFormTag::coproduct_series;
  throw std::invalid_argument("twist form must be one of l, r, c");
}

namespace {

// F_c = sum_i (x^i (x) 1)/i! prod_nu [(Delta - Delta_0)(d^nu)]^{i_nu}.
// Every factor has left d-degree >= 1, so the outer sum stops at the
// working order.
//
// The running products are momentum (x) momentum tensors whose "order in the
// structure constants" h = (left + right d-degree) - |i| never decreases
// under further factors, and the eventual x^i attachment turns h into the
// least output degree any consumer can see. Terms with h above the working
// order are therefore unreachable and pruned as the chain grows.
TensorElement build_fc(const RealizationContext& ctx) {
  const int n = ctx.dim();
  std::vector<TensorElement> diff;
  diff.reserve(static_cast<std::size_t>(n));
  for (int nu = 0; nu < n; ++nu)
    diff.push_back(delta_deformed_left(ctx.momentum_gen(nu), ctx) -
                   delta0_rep(ctx.d(nu)));

  auto pruned = [&](const TensorElement& t, int weight) {
    TensorElement r(n, 2, ctx.order);
    for (const auto& [key, c] : t.terms())
      if (key.f[0].d_degree() + key.f[1].d_degree() - weight <= ctx.order) r.add_term(key, c);
    for (int i = 0; i < 2; ++i) r.set_factor_cert(i, t.cert(i));
    return r;
  };

  TensorElement total = TensorElement::unit(n, 2, ctx.order);
  std::map<MultiIndex, TensorElement> products;
  products.emplace(MultiIndex(n), TensorElement::unit(n, 2, ctx.order));
  for (int m = 1; m <= ctx.order; ++m) {
    bool any = false;
    for (const auto& i : monomials_of_degree(n, m)) {
      int first = -1;
      for (int j = 0; j < n; ++j)
        if (i[j] > 0) {
          first = j;
          break;
        }
      MultiIndex prev = i;
      prev.bump(first, -1);
      auto it = products.find(prev);
      if (it == products.end() || it->second.is_zero()) continue;
      TensorElement prod = pruned(it->second * diff[static_cast<std::size_t>(first)], m);
      if (prod.is_zero()) continue;
      any = true;
      const WeylElement xi_mono = WeylElement::monomial(
          ctx.order, WeylKey{i, MultiIndex(n)}, i.factorial().reciprocal());
      total += TensorElement::outer(xi_mono, ctx.weyl_one()) * prod;
      products.emplace(i, std::move(prod));
    }
    if (!any) break;
  }
  return total;
}

// Arrangement averages of generator words: T_a = W_a/|a|! with
// W_a = sum over arrangements w of the multiset a of gen_{w_1}...gen_{w_k},
// via the last-letter recursion T_a = (1/|a|) sum_s T_{a-e_s} gen_s.
// These carry the whole content of the twist exponentials:
//   exp(sum_s d^s (x) gen_s) = sum_a d^a (x) T_a.
std::map<MultiIndex, WeylElement> arrangement_averages(const std::vector<WeylElement>& gen,
                                                       const RealizationContext& ctx) {
  const int n = ctx.dim();
  std::map<MultiIndex, WeylElement> t;
  t.emplace(MultiIndex(n), ctx.weyl_one());
  for (int m = 1; m <= ctx.order; ++m) {
    for (const auto& a : monomials_of_degree(n, m)) {
      WeylElement acc = ctx.weyl_zero();
      for (int s = 0; s < n; ++s) {
        if (a[s] == 0) continue;
        MultiIndex prev = a;
        prev.bump(s, -1);
        acc += t.at(prev) * gen[static_cast<std::size_t>(s)];
      }
      t.emplace(a, acc * Rational(1, m));
    }
  }
  return t;
}

// The two-exponential products assembled from the arrangement averages.
// With `momentum_factor` = 0 the momentum monomials d^{a+b} sit in the left
// tensor slot (the F_l family); with 1 they sit in the right slot (F_r).
//   rep = exp(-d (x) x) exp(d (x) gen) = sum_{a,b} (-1)^{|a|}/a! d^{a+b} (x) x^a T_b
//   inv = exp(-d (x) gen) exp(d (x) x) = sum_{a,b} (-1)^{|b|}/a! d^{a+b} (x) T_b x^a
TensorElement assemble_exponential_pair(const std::map<MultiIndex, WeylElement>& t, bool inverse,
                                        int momentum_factor, const RealizationContext& ctx) {
  const int n = ctx.dim();
  TensorElement out(n, 2, ctx.order);
  int weyl_cert = kExactOrder;
  const MultiIndex zero(n);
  for (const auto& [b, tb] : t) {
    if (tb.is_zero()) continue;
    for (const auto& a : monomials_up_to_degree(n, ctx.order - b.degree())) {
      Rational scale = a.factorial().reciprocal();
      if ((inverse ? b.degree() : a.degree()) % 2 == 1) scale = -scale;
      const MultiIndex momentum = a + b;
      WeylElement part = ctx.weyl_zero();
      if (inverse) {
        part = tb * WeylElement::monomial(ctx.order, WeylKey{a, zero}, scale);
      } else {
        // x^a from the left is a plain key shift on the normal form.
        for (const auto& [key, c] : tb.terms())
          part.add_term(WeylKey{a + key.x, key.d}, c * scale);
        part.set_cert(tb.cert());
      }
      weyl_cert = std::min(weyl_cert, part.cert());
      for (const auto& [key, c] : part.terms()) {
        TensorKey tk;
        if (momentum_factor == 0)
          tk.f = {WeylKey{zero, momentum}, key};
        else
          tk.f = {key, WeylKey{zero, momentum}};
        out.add_term(tk, c);
      }
    }
  }
  out.set_factor_cert(momentum_factor == 0 ? 1 : 0, weyl_cert);
  return out;
}

// Geometric inverse of 1 (x) 1 + N; each term of N carries at least one
// structure-constant factor, which bounds the power where it dies out.
TensorElement geometric_inverse(const TensorElement& t) {
  const TensorElement one = TensorElement::unit(t.dim(), t.rank(), t.order());
  const TensorElement n = t - one;
  TensorElement acc = one;
  TensorElement pw = one;
  const int cap = 2 * t.order() + 16;
  Rational sign(-1);
  for (int k = 1; k <= cap; ++k) {
    pw = pw * n;
    if (pw.is_zero()) return acc;
    acc += pw * sign;
    sign = -sign;
  }
  throw std::runtime_error("geometric_inverse: series did not terminate at truncation");
}

}  // namespace

const TensorElement& TwistForm::inverse() const {
  if (!inv)
    throw std::logic_error("TwistForm: inverse was not built (build_twist with_inverse=false)");
  return *inv;
}

TwistForm build_twist(TwistFormTag tag, const RealizationContext& ctx, bool with_inverse) {
  switch (tag) {
    case TwistFormTag::left: {
      const auto t = arrangement_averages(ctx.xhat, ctx);
      TwistForm f{tag, assemble_exponential_pair(t, false, 0, ctx), std::nullopt};
      if (with_inverse) f.inv = assemble_exponential_pair(t, true, 0, ctx);
      return f;
    }
    case TwistFormTag::right: {
      const auto t = arrangement_averages(ctx.yhat, ctx);
      TwistForm f{tag, assemble_exponential_pair(t, false, 1, ctx), std::nullopt};
      if (with_inverse) f.inv = assemble_exponential_pair(t, true, 1, ctx);
      return f;
    }
    case TwistFormTag::coproduct_series: {
      TwistForm f{tag, build_fc(ctx), std::nullopt};
      if (with_inverse) f.inv = geometric_inverse(f.rep);
      return f;
    }
  }
  throw std::logic_error("build_twist: unreachable");
}

TensorElement twist_conjugate(const TwistForm& f, const TensorElement& t,
                              const RealizationContext& ctx) {
  switch (f.tag) {
    case TwistFormTag::left:
      // exp(-dxh)exp(dx) T exp(-dx)exp(dxh)
      return hadamard_conj(hadamard_conj(t, ctx.d_tensor_x()), ctx.d_tensor_xhat() * Rational(-1));
    case TwistFormTag::right:
      return hadamard_conj(hadamard_conj(t, ctx.x_tensor_d()), ctx.yhat_tensor_d() * Rational(-1));
    case TwistFormTag::coproduct_series:
      return (f.inverse() * t) * f.rep;
  }
  throw std::logic_error("twist_conjugate: unreachable");
}

Polynomial twisted_star(const TwistForm& f, const Polynomial& a, const Polynomial& b,
                        const RealizationContext& ctx) {
  Polynomial out(ctx.dim());
  const int da = a.degree(), db = b.degree();
  for (const auto& [key, c] : f.rep.terms()) {
    if (key.f[0].d_degree() > da || key.f[1].d_degree() > db) continue;
    const Polynomial left = weyl_monomial_fock(key.f[0], c, a);
    if (left.is_zero()) continue;
    out += left * weyl_monomial_fock(key.f[1], Rational(1), b);
  }
  return out;
}

std::pair<WeylElement, WeylElement> counitality_sides(const TwistForm& f,
                                                      const RealizationContext& ctx) {
  const Polynomial one_poly = Polynomial::one(ctx.dim());
  WeylElement left_side = ctx.weyl_zero();   // (eps (x) 1) F
  WeylElement right_side = ctx.weyl_zero();  // (1 (x) eps) F
  for (const auto& [key, c] : f.rep.terms()) {
    if (key.f[0].d_degree() == 0) {
      const WeylElement embedded =
          WeylElement::from_polynomial(weyl_monomial_fock(key.f[0], c, one_poly), ctx.order);
      left_side += embedded * WeylElement::monomial(ctx.order, key.f[1], Rational(1));
    }
    if (key.f[1].d_degree() == 0) {
      const WeylElement embedded =
          WeylElement::from_polynomial(weyl_monomial_fock(key.f[1], Rational(1), one_poly), ctx.order);
      right_side += WeylElement::monomial(ctx.order, key.f[0], c) * embedded;
    }
  }
  return {left_side, right_side};
}

WeylElement twisted_source(const TwistForm& f, int mu, const RealizationContext& ctx) {
  // alpha_F(a) = alpha_0(F1 act a) F2 with alpha_0 the inclusion of
  // polynomials as multiplication operators.
  const Polynomial xmu = Polynomial::variable(ctx.dim(), mu);
  WeylElement out = ctx.weyl_zero();
  for (const auto& [key, c] : f.rep.terms()) {
    if (key.f[0].d_degree() > 1) continue;
    const Polynomial acted = weyl_monomial_fock(key.f[0], c, xmu);
    if (acted.is_zero()) continue;
    out += WeylElement::from_polynomial(acted, ctx.order) *
           WeylElement::monomial(ctx.order, key.f[1], Rational(1));
  }
  return out;
}

WeylElement twisted_target(const TwistForm& f, int mu, const RealizationContext& ctx) {
  // beta_F(a) = beta_0(F2 act a) F1.
  const Polynomial xmu = Polynomial::variable(ctx.dim(), mu);
  WeylElement out = ctx.weyl_zero();
  for (const auto& [key, c] : f.rep.terms()) {
    if (key.f[1].d_degree() > 1) continue;
    const Polynomial acted = weyl_monomial_fock(key.f[1], c, xmu);
    if (acted.is_zero()) continue;
    out += WeylElement::from_polynomial(acted, ctx.order) *
           WeylElement::monomial(ctx.order, key.f[0], Rational(1));
  }
  return out;
}

std::pair<TensorElement, TensorElement> cocycle_sides(const TwistForm& f) {
  const TensorElement lhs = f.rep.delta0_factor(0) * f.rep.embed_rank3(2);
  const TensorElement rhs = f.rep.delta0_factor(1) * f.rep.embed_rank3(0);
  return {lhs, rhs};
}

std::pair<TensorElement, TensorElement> inverse_cocycle_sides(const TwistForm& f) {
  const TensorElement& inv = f.inverse();
  const TensorElement lhs = inv.embed_rank3(2) * inv.delta0_factor(0);
  const TensorElement rhs = inv.embed_rank3(0) * inv.delta0_factor(1);
  return {lhs, rhs};
}

TensorElement ideal_conjugation_closed_form(TwistFormTag tag, int mu,
                                            const RealizationContext& ctx) {
  const int n = ctx.dim();
  TensorElement out(n, 2, ctx.order);
  if (tag == TwistFormTag::left) {
    // xhat_tau (phi^{-1})^tau_mu (x) 1 - (phitilde^{-1})^tau_mu (x) xhat_tau
    for (int tau = 0; tau < n; ++tau) {
      out += TensorElement::outer(ctx.xhat[static_cast<std::size_t>(tau)] *
                                      WeylElement::from_momentum(ctx.phiinv.at(tau, mu)),
                                  ctx.weyl_one());
      out -= TensorElement::outer(WeylElement::from_momentum(ctx.phitildeinv.at(tau, mu)),
                                  ctx.xhat[static_cast<std::size_t>(tau)]);
    }
    return out;
  }
  if (tag == TwistFormTag::right) {
    // yhat_tau (x) (phi^{-1})^tau_mu - 1 (x) x_mu. The right factor is the
    // plain x_mu = xhat_tau (phi^{-1})^tau_mu, matching the generator
    // factorization (1 (x) xhat_tau - yhat_tau (x) 1)(1 (x) (phi^{-1})^tau_mu).
    for (int tau = 0; tau < n; ++tau)
      out += TensorElement::outer(ctx.yhat[static_cast<std::size_t>(tau)],
                                  WeylElement::from_momentum(ctx.phiinv.at(tau, mu)));
    out -= TensorElement::outer(ctx.weyl_one(), ctx.x(mu));
    return out;
  }
  throw std::invalid_argument("ideal_conjugation_closed_form: stated for F_l and F_r only");
}

}  // namespace lietwist
