#include "lietwist/realization.hpp"

#include <stdexcept>

#include "lietwist/bernoulli.hpp"

namespace lietwist {

TensorElement RealizationContext::d_tensor_x() const {
  TensorElement t(dim(), 2, order);
  for (int i = 0; i < dim(); ++i) t += TensorElement::outer(d(i), x(i));
  return t;
}

TensorElement RealizationContext::d_tensor_xhat() const {
  TensorElement t(dim(), 2, order);
  for (int i = 0; i < dim(); ++i) t += TensorElement::outer(d(i), xhat[static_cast<std::size_t>(i)]);
  return t;
}

TensorElement RealizationContext::x_tensor_d() const {
  TensorElement t(dim(), 2, order);
  for (int i = 0; i < dim(); ++i) t += TensorElement::outer(x(i), d(i));
  return t;
}

TensorElement RealizationContext::yhat_tensor_d() const {
  TensorElement t(dim(), 2, order);
  for (int i = 0; i < dim(); ++i) t += TensorElement::outer(yhat[static_cast<std::size_t>(i)], d(i));
  return t;
}

MatrixSeries bernoulli_matrix_series(const MatrixSeries& m, bool tilde) {
  if (!m.has_zero_constant())
    throw std::invalid_argument("bernoulli_matrix_series: nonzero constant term");
  const int order = m.order();
  MatrixSeries acc = MatrixSeries::identity(m.dim(), order);
  MatrixSeries pw = acc;
  bool terminated = false;
  for (int n = 1; n <= order; ++n) {
    pw = pw * m;
    bool zero = true;
    for (int i = 0; i < m.dim() && zero; ++i)
      for (int j = 0; j < m.dim() && zero; ++j)
        if (!pw.at(i, j).is_zero()) zero = false;
    if (zero) {
      terminated = true;
      break;
    }
    Rational c = bernoulli(n) / Rational::factorial(n);
    if (!tilde && n % 2 == 1) c = -c;  // (-1)^N B_N / N!
    acc = acc + pw * c;
  }
  if (!terminated)
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) acc.at(i, j).set_cert(order);
  return acc;
}

namespace {

// Marks every entry certified only to the working order unless the power
// ladder of `m` dies out below it (then the series is a finite exact sum).
void mark_series_cert(MatrixSeries& built, const MatrixSeries& m) {
  MatrixSeries pw = MatrixSeries::identity(m.dim(), m.order());
  for (int n = 1; n <= m.order() + 1; ++n) {
    pw = pw * m;
    bool zero = true;
    for (int i = 0; i < m.dim() && zero; ++i)
      for (int j = 0; j < m.dim() && zero; ++j)
        if (!pw.at(i, j).is_zero()) zero = false;
    if (zero) return;
  }
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) built.at(i, j).set_cert(m.order());
}

}  // namespace

RealizationContext build_context(const LieAlgebraDef& alg, int order) {
  if (order < 1) throw std::invalid_argument("build_context: order must be >= 1");
  if (auto issue = validate(alg))
    throw std::invalid_argument("build_context: invalid algebra: " + issue->detail);

  const int n = alg.dim();
  RealizationContext ctx{alg,
                         order,
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         MatrixSeries(n, order),
                         {},
                         {},
                         std::make_shared<PBWEngine>(alg),
                         std::make_shared<std::map<MultiIndex, WeylElement>>()};

  // C^alpha_beta = C^alpha_{beta gamma} d^gamma, alpha the row index.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MomentumSeries entry(n, order);
      for (int g = 0; g < n; ++g) {
        const Rational c = alg.c(a, b, g);
        if (!c.is_zero()) entry.add_term(MultiIndex::unit(n, g), c);
      }
      ctx.C.at(a, b) = entry;
    }

  ctx.phi = bernoulli_matrix_series(ctx.C, false);
  ctx.phitilde = bernoulli_matrix_series(ctx.C, true);
  ctx.O = matrix_exp(ctx.C);
  mark_series_cert(ctx.O, ctx.C);
  ctx.Oinv = matrix_inv(ctx.O);
  ctx.phiinv = matrix_inv(ctx.phi);
  ctx.phitildeinv = matrix_inv(ctx.phitilde);

  auto realize_linear = [&](const MatrixSeries& mat, int rho) {
    WeylElement w(n, order);
    int cert = kExactOrder;
    for (int tau = 0; tau < n; ++tau) {
      const MomentumSeries& entry = mat.at(tau, rho);
      for (const auto& [m, c] : entry.terms()) w.add_term(WeylKey{MultiIndex::unit(n, tau), m}, c);
      cert = std::min(cert, entry.cert());
    }
    w.set_cert(cert);
    return w;
  };
  for (int rho = 0; rho < n; ++rho) {
    ctx.xhat.push_back(realize_linear(ctx.phi, rho));
    ctx.yhat.push_back(realize_linear(ctx.phitilde, rho));
  }
  return ctx;
}

namespace {

// xhat_1^{m_1} ... xhat_n^{m_n}, memoized per context.
const WeylElement& realize_monomial(const MultiIndex& m, const RealizationContext& ctx) {
  auto& memo = *ctx.realize_memo;
  auto it = memo.find(m);
  if (it != memo.end()) return it->second;
  WeylElement w = ctx.weyl_one();
  if (!m.is_zero()) {
    int last = -1;
    for (int i = ctx.dim() - 1; i >= 0; --i)
      if (m[i] > 0) {
        last = i;
        break;
      }
    MultiIndex rest = m;
    rest.bump(last, -1);
    w = realize_monomial(rest, ctx) * ctx.xhat[static_cast<std::size_t>(last)];
  }
  return memo.emplace(m, std::move(w)).first->second;
}

}  // namespace

WeylElement realize(const PBWElement& u, const RealizationContext& ctx) {
  WeylElement w = ctx.weyl_zero();
  for (const auto& [m, c] : u.terms()) w += realize_monomial(m, ctx) * c;
  return w;
}

WeylElement target_map(const PBWElement& u, const RealizationContext& ctx) {
  WeylElement w = ctx.weyl_zero();
  for (const auto& [m, c] : u.terms()) {
    WeylElement prod = ctx.weyl_one();
    for (int i = ctx.dim() - 1; i >= 0; --i)
      for (int k = 0; k < m[i]; ++k) prod = prod * ctx.yhat[static_cast<std::size_t>(i)];
    w += prod * c;
  }
  return w;
}

CommutatorReport check_xy_commute(const RealizationContext& ctx) {
  CommutatorReport rep;
  rep.verified_order = kExactOrder;
  for (int a = 0; a < ctx.dim(); ++a)
    for (int b = 0; b < ctx.dim(); ++b) {
      const WeylElement c = ctx.xhat[static_cast<std::size_t>(a)].commutator(
          ctx.yhat[static_cast<std::size_t>(b)]);
      const int k = std::min(c.cert(), ctx.order);
      rep.verified_order = std::min(rep.verified_order, c.cert());
      if (!c.equal_up_to(ctx.weyl_zero(), k)) {
        rep.pass = false;
        rep.first_failure = "[xhat_" + std::to_string(a + 1) + ", yhat_" + std::to_string(b + 1) +
                            "] = " + c.str();
        return rep;
      }
    }
  return rep;
}

std::vector<std::pair<Polynomial, MultiIndex>> decompose_smash(const WeylElement& w,
                                                               const RealizationContext& ctx) {
  if (!is_exact_order(w.cert()) && w.cert() < w.max_d_degree())
    throw std::runtime_error("decompose_smash: certified order " + std::to_string(w.cert()) +
                             " below the maximal d-degree " + std::to_string(w.max_d_degree()));
  std::vector<std::pair<Polynomial, MultiIndex>> out;
  WeylElement residual = w;
  for (int d = 0; d <= ctx.order && !residual.is_zero(); ++d) {
    // The d-degree-d layer of the residual is a pure x-polynomial per d^b.
    std::map<MultiIndex, Polynomial> layer;
    for (const auto& [k, c] : residual.terms())
      if (k.d_degree() == d) {
        auto [it, unused] = layer.try_emplace(k.d, Polynomial(ctx.dim()));
        it->second.add_term(k.x, c);
      }
    for (const auto& [b, f] : layer) {
      out.emplace_back(f, b);
      WeylElement sub = realize(ctx.pbw->xi(f), ctx) *
                        WeylElement::monomial(ctx.order, WeylKey{MultiIndex(ctx.dim()), b}, Rational(1));
      residual -= sub;
    }
    for (const auto& [k, c] : residual.terms())
      if (k.d_degree() <= d)
        throw std::runtime_error("decompose_smash: elimination left a residue at d-degree " +
                                 std::to_string(k.d_degree()) + " (insufficient certified order)");
  }
  if (!residual.is_zero())
    throw std::runtime_error("decompose_smash: elimination did not terminate within the order");
  return out;
}

WeylElement recompose_smash(const std::vector<std::pair<Polynomial, MultiIndex>>& parts,
                            const RealizationContext& ctx) {
  WeylElement w = ctx.weyl_zero();
  for (const auto& [f, b] : parts)
    w += realize(ctx.pbw->xi(f), ctx) *
         WeylElement::monomial(ctx.order, WeylKey{MultiIndex(ctx.dim()), b}, Rational(1));
  return w;
}

}  // namespace lietwist
