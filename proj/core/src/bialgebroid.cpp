#include "lietwist/bialgebroid.hpp"

#include <stdexcept>

namespace lietwist {

namespace {

// Grid of argument tuples: all (m_1, ..., m_rank) with total degree <= D.
std::vector<std::vector<MultiIndex>> argument_grid(int dim, int rank, int total_degree) {
  std::vector<std::vector<MultiIndex>> out;
  const auto all = monomials_up_to_degree(dim, total_degree);
  if (rank == 2) {
    for (const auto& a : all)
      for (const auto& b : all)
        if (a.degree() + b.degree() <= total_degree) out.push_back({a, b});
  } else {
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          if (a.degree() + b.degree() + c.degree() <= total_degree) out.push_back({a, b, c});
  }
  return out;
}

}  // namespace

MembershipResult ideal_member(const TensorElement& t, IdealKind kind, int test_degree,
                              const RealizationContext& ctx) {
  const int rank = t.rank();
  const TensorElement boxed = t.boxed(test_degree);
  const auto grid = argument_grid(ctx.dim(), rank, test_degree);
  MembershipResult res;
  res.member = true;

  if (kind == IdealKind::undeformed) {
    for (const auto& args : grid) {
      std::vector<Polynomial> arg_polys;
      arg_polys.reserve(args.size());
      for (const auto& m : args) arg_polys.push_back(Polynomial::monomial(m, Rational(1)));
      Polynomial total(ctx.dim());
      for (const auto& [key, c] : boxed.terms()) {
        Polynomial prod = weyl_monomial_fock(key.f[0], c, arg_polys[0]);
        for (int i = 1; i < rank && !prod.is_zero(); ++i)
          prod = prod * weyl_monomial_fock(key.f[static_cast<std::size_t>(i)], Rational(1),
                                           arg_polys[static_cast<std::size_t>(i)]);
        total += prod;
      }
      if (!total.is_zero()) {
        res.member = false;
        MembershipWitness w;
        for (const auto& m : args) w.arguments.push_back(Polynomial::monomial(m, Rational(1)).str());
        w.value = total.str();
        res.witness = w;
        return res;
      }
    }
    return res;
  }

  // Deformed: transported action on PBW monomials, multiplied in U(g).
  auto& engine = *ctx.pbw;
  std::map<std::pair<WeylKey, MultiIndex>, PBWElement> act_cache;
  auto act = [&](const WeylKey& k, const MultiIndex& m) -> const PBWElement& {
    auto it = act_cache.find({k, m});
    if (it != act_cache.end()) return it->second;
    const WeylElement mono = WeylElement::monomial(ctx.order, k, Rational(1));
    PBWElement r = engine.deformed_act(mono, PBWElement::monomial(m, Rational(1)));
    return act_cache.emplace(std::make_pair(k, m), std::move(r)).first->second;
  };
  for (const auto& args : grid) {
    PBWElement total(ctx.dim());
    for (const auto& [key, c] : boxed.terms()) {
      PBWElement prod = act(key.f[0], args[0]) * c;
      for (int i = 1; i < rank && !prod.is_zero(); ++i)
        prod = engine.mul(prod, act(key.f[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(i)]));
      total += prod;
    }
    if (!total.is_zero()) {
      res.member = false;
      MembershipWitness w;
      for (const auto& m : args) w.arguments.push_back(PBWElement::monomial(m, Rational(1)).str());
      w.value = total.str();
      res.witness = w;
      return res;
    }
  }
  return res;
}

MembershipResult coset_equal(const TensorElement& a, const TensorElement& b, IdealKind kind,
                             int test_degree, const RealizationContext& ctx) {
  return ideal_member(a - b, kind, test_degree, ctx);
}

std::vector<TensorElement> ideal_generators(IdealKind kind, const RealizationContext& ctx) {
  std::vector<TensorElement> gens;
  const int n = ctx.dim();
  if (kind == IdealKind::undeformed) {
    for (int mu = 0; mu < n; ++mu)
      gens.push_back(TensorElement::outer(ctx.x(mu), ctx.weyl_one()) -
                     TensorElement::outer(ctx.weyl_one(), ctx.x(mu)));
    return gens;
  }
  for (int rho = 0; rho < n; ++rho) {
    TensorElement g = TensorElement::outer(ctx.xhat[static_cast<std::size_t>(rho)], ctx.weyl_one());
    for (int tau = 0; tau < n; ++tau)
      g -= TensorElement::outer(WeylElement::from_momentum(ctx.O.at(tau, rho)),
                                ctx.xhat[static_cast<std::size_t>(tau)]);
    gens.push_back(g);
  }
  return gens;
}

namespace {

TensorElement delta_deformed(const MomentumSeries& p, const RealizationContext& ctx, bool left) {
  if (p.dim() != ctx.dim()) throw std::invalid_argument("delta_deformed: dimension mismatch");
  const WeylElement pw = WeylElement::from_momentum(p.with_order(ctx.order));
  const TensorElement start = left ? TensorElement::outer(ctx.weyl_one(), pw)
                                   : TensorElement::outer(pw, ctx.weyl_one());
  const TensorElement gen = left ? ctx.d_tensor_xhat() * Rational(-1)
                                 : ctx.yhat_tensor_d() * Rational(-1);
  TensorElement out = hadamard_conj(start, gen);
  // The value lies in S^(g*) (x) S^(g*); anything else signals a bug or an
  // insufficient working order.
  for (const auto& [key, c] : out.terms())
    for (const auto& f : key.f)
      if (f.x_degree() > 0)
        throw std::runtime_error("delta_deformed: non-momentum residue " + f.str());
  return out;
}

}  // namespace

TensorElement delta_deformed_left(const MomentumSeries& p, const RealizationContext& ctx) {
  return delta_deformed(p, ctx, true);
}

TensorElement delta_deformed_right(const MomentumSeries& p, const RealizationContext& ctx) {
  return delta_deformed(p, ctx, false);
}

TensorElement delta_H_rep(const WeylElement& w, const RealizationContext& ctx) {
  TensorElement out(ctx.dim(), 2, ctx.order);
  for (const auto& [f, b] : decompose_smash(w, ctx)) {
    const TensorElement lhs = TensorElement::outer(realize(ctx.pbw->xi(f), ctx), ctx.weyl_one());
    const MomentumSeries db = MomentumSeries::monomial(ctx.order, b, Rational(1));
    out += lhs * delta_deformed_left(db, ctx);
  }
  return out;
}

Polynomial counit0(const WeylElement& w) { return w.fock_act(Polynomial::one(w.dim())); }

PBWElement counit_def(const WeylElement& w, const RealizationContext& ctx) {
  return ctx.pbw->xi(counit0(w));
}

WeylElement source_map(const PBWElement& u, const RealizationContext& ctx) {
  return realize(u, ctx);
}

}  // namespace lietwist
