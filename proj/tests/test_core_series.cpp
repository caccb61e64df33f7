#include <doctest.h>

#include <random>

#include "lietwist/bch.hpp"
#include "lietwist/bernoulli.hpp"
#include "lietwist/matrix_series.hpp"
#include "lietwist/momentum_series.hpp"
#include "lietwist/realization.hpp"

using namespace lietwist;

namespace {

// Independent oracle: B_N = N! [x^N] (x / (e^x - 1)), computed by inverting
// the series (e^x - 1)/x = sum_k x^k / (k+1)! with exact rationals. This
// never touches the recurrence used by the implementation.
Rational bernoulli_oracle(int n) {
  const int len = n + 1;
  std::vector<Rational> g(len);  // (e^x - 1)/x
  for (int k = 0; k < len; ++k) g[k] = Rational::factorial(k + 1).reciprocal();
  std::vector<Rational> inv(len);  // reciprocal series
  inv[0] = Rational(1);
  for (int k = 1; k < len; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += g[j] * inv[k - j];
    inv[k] = -acc;
  }
  return inv[n] * Rational::factorial(n);
}

MomentumSeries d(int i, int dim = 2, int order = 4) {
  return MomentumSeries::generator(dim, order, i);
}

}  // namespace

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
}

TEST_CASE("bernoulli numbers against the series-reciprocal oracle") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == bernoulli_oracle(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(4) == bernoulli_oracle(4));
  CHECK(bernoulli(4) == Rational(-1, 30));
  for (int n = 0; n <= 14; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
  for (int k = 1; 2 * k + 1 <= 13; ++k) CHECK(bernoulli(2 * k + 1).is_zero());
}

TEST_CASE("series multiplication basics") {
  const MomentumSeries one = MomentumSeries::one(2, 2);
  const MomentumSeries a = one + d(0, 2, 2);
  const MomentumSeries b = one - d(0, 2, 2);
  CHECK((a * b) == one - d(0, 2, 2) * d(0, 2, 2));

  const MomentumSeries c = one + d(1, 2, 2) * Rational(3, 7);
  CHECK((c * MomentumSeries::one(2, 2)) == c);

  // Truncation discards the degree-2 product entirely at order 1.
  const MomentumSeries p = d(0, 2, 1) * d(1, 2, 1);
  CHECK(p.is_zero());
  CHECK(p.cert() == 1);  // the discard is recorded

  CHECK_THROWS_AS(d(0, 2, 2) * d(0, 3, 2), std::invalid_argument);
}

TEST_CASE("series ring laws on sampled elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  auto random_series = [&](int dim, int order) {
    MomentumSeries s(dim, order);
    for (const auto& m : monomials_up_to_degree(dim, order))
      if (int c = coef(rng); c != 0 && coef(rng) > 0) s.add_term(m, Rational(c, 1 + (m.degree() % 3)));
    return s;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const MomentumSeries a = random_series(2, 4), b = random_series(2, 4), c = random_series(2, 4);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("formal partial derivative") {
  const MomentumSeries sq = d(0) * d(0);
  CHECK(sq.partial(0) == d(0) * Rational(2));
  CHECK(d(1).partial(0).is_zero());
  CHECK((d(0) * d(1)).partial(1) == d(0));
  CHECK_THROWS_AS(d(0).partial(5), std::invalid_argument);

  // Schwarz symmetry on a sampled element.
  MomentumSeries s(3, 5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (const auto& m : monomials_up_to_degree(3, 5))
    if (int c = coef(rng); c != 0) s.add_term(m, Rational(c, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(s.partial(i).partial(j) == s.partial(j).partial(i));

  // Differentiation costs one certified degree.
  CHECK(MomentumSeries(3, 5).partial(0).cert() >= kExactOrder);
  MomentumSeries t = s;
  t.set_cert(5);
  CHECK(t.partial(0).cert() == 4);
}

TEST_CASE("series exp and log") {
  const MomentumSeries n = d(0, 2, 4) + d(1, 2, 4) * Rational(1, 2);
  CHECK(n.exp().log() == n);
  CHECK_THROWS_AS(MomentumSeries::one(2, 4).exp(), std::invalid_argument);
  CHECK_THROWS_AS(n.log(), std::invalid_argument);
}

TEST_CASE("matrix exponential, logarithm and inverse") {
  const int order = 4;
  SUBCASE("exp of zero is the identity") {
    CHECK(matrix_exp(MatrixSeries(2, order)) == MatrixSeries::identity(2, order));
  }
  SUBCASE("heisenberg C has C^2 = 0 so the exponential truncates") {
    const RealizationContext ctx = build_context(catalog("heisenberg3"), order);
    CHECK((ctx.C * ctx.C).has_zero_constant());
    bool csq_zero = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(ctx.C * ctx.C).at(i, j).is_zero()) csq_zero = false;
    CHECK(csq_zero);
    CHECK(matrix_exp(ctx.C) == MatrixSeries::identity(3, order) + ctx.C);
  }
  SUBCASE("geometric inverse of 1 + N") {
    MatrixSeries n(2, order);
    n.at(0, 1) = MomentumSeries::generator(2, order, 0);
    n.at(1, 0) = MomentumSeries::generator(2, order, 1) * Rational(1, 3);
    const MatrixSeries m = MatrixSeries::identity(2, order) + n;
    CHECK((matrix_inv(m) * m).equal_up_to(MatrixSeries::identity(2, order), order));
    CHECK((m * matrix_inv(m)).equal_up_to(MatrixSeries::identity(2, order), order));
  }
  SUBCASE("inv(exp(M)) = exp(-M) for catalog algebras") {
    for (const char* name : {"heisenberg3", "su2", "kappa(2)"}) {
      const RealizationContext ctx = build_context(catalog(name), order);
      CHECK(matrix_inv(matrix_exp(ctx.C))
                .equal_up_to(matrix_exp(ctx.C * Rational(-1)), order));
    }
  }
  SUBCASE("log inverts exp") {
    const RealizationContext ctx = build_context(catalog("su2"), order);
    CHECK(matrix_log(matrix_exp(ctx.C)).equal_up_to(ctx.C, order));
  }
  SUBCASE("singular constant term is rejected") {
    MatrixSeries z(2, order);
    CHECK_THROWS_AS(matrix_inv(z), std::invalid_argument);
    CHECK_THROWS_AS(matrix_log(z), std::invalid_argument);
    CHECK_THROWS_AS(matrix_exp(MatrixSeries::identity(2, order)), std::invalid_argument);
  }
}

TEST_CASE("generic bch product") {
  SUBCASE("commuting momentum series") {
    const MomentumSeries a = d(0, 2, 4), b = d(1, 2, 4) * Rational(2, 3);
    const MomentumSeries one = MomentumSeries::one(2, 4);
    CHECK(bch_product(a, b, one, 8) == a + b);
    CHECK(alg_log(alg_exp(a, one, 8), one, 8) == a);
    CHECK_THROWS_AS(bch_product(one, b, one, 8), std::invalid_argument);
  }
  SUBCASE("tensor pair picks up the half commutator at second order") {
    const int order = 2;
    const TensorElement a =
        TensorElement::outer(WeylElement::d_gen(1, order, 0), WeylElement::x_gen(1, order, 0));
    const TensorElement b =
        TensorElement::outer(WeylElement::d_gen(1, order, 0),
                             WeylElement::x_gen(1, order, 0) * Rational(2)) +
        TensorElement::outer(WeylElement::d_gen(1, order, 0), WeylElement::one(1, order));
    const TensorElement one = TensorElement::unit(1, 2, order);
    const TensorElement bch = bch_product(a, b, one, 12);
    const TensorElement expected = a + b + a.commutator(b) * Rational(1, 2);
    CHECK(bch.equal_up_to_total(expected, 2));
  }
}
