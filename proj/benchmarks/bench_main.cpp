#include <benchmark/benchmark.h>

#include "lietwist/bialgebroid.hpp"
#include "lietwist/twist.hpp"
#include "lietwist/verify.hpp"

namespace {

using namespace lietwist;

void BM_series_mul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  MomentumSeries a(3, order), b(3, order);
  for (const auto& m : monomials_up_to_degree(3, order)) {
    a.add_term(m, Rational(m.degree() + 1, 3));
    b.add_term(m, Rational(2 * m.degree() + 1, 5));
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mul)->Arg(4)->Arg(7);

void BM_build_context_su2(benchmark::State& state) {
  const LieAlgebraDef alg = catalog("su2");
  for (auto _ : state) benchmark::DoNotOptimize(build_context(alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_build_context_su2)->Arg(4)->Arg(7);

void BM_star_oracle_su2(benchmark::State& state) {
  const RealizationContext ctx = build_context(catalog("su2"), 7);
  const Polynomial f = Polynomial::parse(3, "x1^2*x2");
  const Polynomial g = Polynomial::parse(3, "x2*x3^2");
  for (auto _ : state) benchmark::DoNotOptimize(ctx.pbw->star(f, g));
}
BENCHMARK(BM_star_oracle_su2);

void BM_build_twist_left_heis(benchmark::State& state) {
  const RealizationContext ctx = build_context(catalog("heisenberg3"), 7);
  for (auto _ : state) benchmark::DoNotOptimize(build_twist(TwistFormTag::left, ctx));
}
BENCHMARK(BM_build_twist_left_heis);

void BM_ideal_oracle_heis(benchmark::State& state) {
  const RealizationContext ctx = build_context(catalog("heisenberg3"), 7);
  const auto gens = ideal_generators(IdealKind::deformed, ctx);
  for (auto _ : state)
    benchmark::DoNotOptimize(ideal_member(gens[0], IdealKind::deformed, 3, ctx));
}
BENCHMARK(BM_ideal_oracle_heis);

}  // namespace

BENCHMARK_MAIN();
