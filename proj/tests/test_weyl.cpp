#include <doctest.h>

#include <random>

#include "lietwist/tensor.hpp"
#include "lietwist/weyl.hpp"

using namespace lietwist;

namespace {

constexpr int kOrder = 9;

WeylElement X(int i, int dim = 3) { return WeylElement::x_gen(dim, kOrder, i); }
WeylElement D(int i, int dim = 3) { return WeylElement::d_gen(dim, kOrder, i); }

std::vector<WeylKey> monomial_keys(int dim, int max_deg) {
  std::vector<WeylKey> keys;
  for (const auto& a : monomials_up_to_degree(dim, max_deg))
    for (const auto& b : monomials_up_to_degree(dim, max_deg)) keys.push_back(WeylKey{a, b});
  return keys;
}

}  // namespace

TEST_CASE("normal ordering of the defining relation") {
  CHECK(D(0) * X(0) == X(0) * D(0) + WeylElement::one(3, kOrder));
  CHECK((X(0) * D(0)).terms().size() == 1);  // already normal
  // [x3 d2, x3 d1] = 0, the core of the heisenberg commutator check.
  const WeylElement a = X(2) * D(1), b = X(2) * D(0);
  CHECK(a.commutator(b).is_zero());
}

TEST_CASE("weyl product associativity on monomials") {
  SUBCASE("exhaustive in one variable up to degree 3") {
    for (const auto& ka : monomial_keys(1, 3))
      for (const auto& kb : monomial_keys(1, 3))
        for (const auto& kc : monomial_keys(1, 3)) {
          const WeylElement a = WeylElement::monomial(kOrder, ka, Rational(1));
          const WeylElement b = WeylElement::monomial(kOrder, kb, Rational(2, 3));
          const WeylElement c = WeylElement::monomial(kOrder, kc, Rational(-1));
          CHECK(((a * b) * c) == (a * (b * c)));
        }
  }
  SUBCASE("sampled triples in three variables") {
    std::mt19937_64 rng(3);
    const auto keys = monomial_keys(3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const WeylElement a = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1));
      const WeylElement b = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1));
      const WeylElement c = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1));
      CHECK(((a * b) * c) == (a * (b * c)));
    }
  }
}

TEST_CASE("fock action") {
  const Polynomial x1x2 = Polynomial::parse(3, "x1*x2");
  CHECK(D(0).fock_act(x1x2) == Polynomial::parse(3, "x2"));

  // The heisenberg xhat_1 realization acting on x2 equals x1 x2 + 1/2 x3.
  const WeylElement xhat1 = X(0) + X(2) * D(1) * Rational(1, 2);
  CHECK(xhat1.fock_act(Polynomial::parse(3, "x2")) == Polynomial::parse(3, "x1*x2 + 1/2*x3"));

  // Acting on 1 extracts the d-free part.
  const WeylElement w = X(0) * X(1) + X(2) * D(0) * Rational(5) + D(1);
  CHECK(w.fock_act(Polynomial::one(3)) == Polynomial::parse(3, "x1*x2"));

  SUBCASE("module action property on sampled monomials") {
    std::mt19937_64 rng(5);
    const auto keys = monomial_keys(3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    const auto polys = monomials_up_to_degree(3, 3);
    std::uniform_int_distribution<std::size_t> pickp(0, polys.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      const WeylElement u = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1));
      const WeylElement v = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1));
      const Polynomial f = Polynomial::monomial(polys[pickp(rng)], Rational(1));
      CHECK((u * v).fock_act(f) == u.fock_act(v.fock_act(f)));
    }
  }

  SUBCASE("insufficient certified order is refused") {
    WeylElement w2 = D(0);
    w2.set_cert(1);
    CHECK_THROWS_AS(w2.fock_act(Polynomial::parse(3, "x1^2")), std::runtime_error);
  }
}

TEST_CASE("tensor product over the field") {
  const int n = 3, order = 4;
  const auto one = WeylElement::one(n, order);
  const auto x1 = WeylElement::x_gen(n, order, 0);
  const auto d1 = WeylElement::d_gen(n, order, 0);

  CHECK(TensorElement::outer(x1, one) * TensorElement::outer(one, d1) ==
        TensorElement::outer(x1, d1));
  CHECK(TensorElement::outer(d1, one) * TensorElement::outer(x1, one) ==
        TensorElement::outer(x1 * d1 + one, one));

  SUBCASE("rank/dim mismatch throws") {
    CHECK_THROWS_AS(TensorElement::outer(x1, one) * TensorElement::unit(n, 3, order),
                    std::invalid_argument);
  }
}

TEST_CASE("tensor exponential") {
  const int n = 1, order = 1;
  const auto d1 = WeylElement::d_gen(n, order, 0);
  const auto x1 = WeylElement::x_gen(n, order, 0);
  const TensorElement zero(n, 2, order);
  CHECK(zero.exp(0) == TensorElement::unit(n, 2, order));

  const TensorElement dx = TensorElement::outer(d1, x1);
  CHECK(dx.exp(0) == TensorElement::unit(n, 2, order) + dx);

  // exp(-d(x)x) exp(d(x)x) = 1 (x) 1 exactly at any order.
  const int order2 = 5;
  const TensorElement dx5 = TensorElement::outer(WeylElement::d_gen(n, order2, 0),
                                                 WeylElement::x_gen(n, order2, 0));
  CHECK((dx5 * Rational(-1)).exp(0) * dx5.exp(0) == TensorElement::unit(n, 2, order2));

  SUBCASE("convergence precondition reports the offending monomial") {
    const TensorElement xd = TensorElement::outer(x1, d1);
    CHECK_THROWS_WITH_AS(xd.exp(0), doctest::Contains("d-degree 0"), std::invalid_argument);
    CHECK_NOTHROW(xd.exp(1));
  }
}

TEST_CASE("undeformed coproduct representative") {
  const int n = 3, order = 4;
  const auto x1 = WeylElement::x_gen(n, order, 0);
  const auto d1 = WeylElement::d_gen(n, order, 0);
  CHECK(delta0_rep(x1) == TensorElement::outer(x1, WeylElement::one(n, order)));
  CHECK(delta0_rep(d1) == TensorElement::outer(WeylElement::one(n, order), d1) +
                              TensorElement::outer(d1, WeylElement::one(n, order)));
  // Multiplicativity on x1 d1.
  CHECK(delta0_rep(x1 * d1) == delta0_rep(x1) * delta0_rep(d1));
}

TEST_CASE("undeformed antipode") {
  const int n = 3;
  const auto x1 = X(0), d1 = D(0);
  const auto one = WeylElement::one(n, kOrder);

  CHECK((x1 * d1).s0() == -(x1 * d1 + one));
  CHECK(x1.s0() == x1);
  CHECK(d1.s0() == -d1);

  SUBCASE("involution and antihomomorphism on sampled monomials") {
    std::mt19937_64 rng(9);
    const auto keys = monomial_keys(3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    for (int trial = 0; trial < 120; ++trial) {
      const WeylElement u = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(1, 2));
      const WeylElement v = WeylElement::monomial(kOrder, keys[pick(rng)], Rational(3));
      CHECK(u.s0().s0() == u);
      CHECK((u * v).s0() == v.s0() * u.s0());
    }
  }
}

TEST_CASE("s0 on the left tensor factor and contraction") {
  const int n = 3, order = 4;
  const auto x1 = WeylElement::x_gen(n, order, 0);
  const auto d1 = WeylElement::d_gen(n, order, 0);
  const auto one = WeylElement::one(n, order);

  CHECK(TensorElement::outer(d1, x1).s0_left() == TensorElement::outer(d1, x1) * Rational(-1));
  CHECK(TensorElement::outer(x1, d1).s0_left() == TensorElement::outer(x1, d1));
  CHECK(TensorElement::outer(x1 * d1, one).s0_left() ==
        TensorElement::outer(x1 * d1 + one, one) * Rational(-1));

  CHECK(TensorElement::outer(x1, d1).contract() == x1 * d1);
  CHECK(TensorElement::outer(d1, x1).contract() == x1 * d1 + one);
}

TEST_CASE("x-degree cap refuses pathological growth") {
  WeylElement a = WeylElement::x_gen(2, 2, 0);
  a.set_xcap(3);
  WeylElement p = a;
  p = p * a;
  p = p * a;  // x1^3 still within the cap
  CHECK(p == WeylElement::monomial(2, WeylKey{MultiIndex{3, 0}, MultiIndex{0, 0}}, Rational(1)));
  CHECK_THROWS_WITH_AS(p * a, doctest::Contains("x-degree cap"), std::runtime_error);
}

TEST_CASE("canonical text form") {
  const auto w = X(0) * D(1) * Rational(1, 2) - WeylElement::one(3, kOrder) * Rational(2);
  CHECK(w.str() == "-2 + 1/2 * x1 d2");
  CHECK(MomentumSeries::generator(2, 3, 1).str() == "d2");
  const auto t = TensorElement::outer(D(0, 1), X(0, 1) * Rational(-1));
  CHECK(t.str() == "-d1 \xE2\x8A\x97 x1");
}
