#include <doctest.h>

#include "lietwist/lie_algebra.hpp"

using namespace lietwist;

TEST_CASE("validate accepts the catalog and reports violations") {
  CHECK(!validate(catalog("abelian(2)")));
  CHECK(!validate(catalog("heisenberg3")));

  SUBCASE("antisymmetry violation names the first bad tuple") {
    LieAlgebraDef bad("bad", 2);
    bad.set_c(0, 0, 1, Rational(1));  // C^1_{12} = 1 without the mirror entry
    const auto issue = validate(bad);
    REQUIRE(issue.has_value());
    CHECK(issue->kind == LieValidationIssue::Kind::antisymmetry);
    CHECK(issue->indices == std::array<int, 4>{1, 1, 2, 0});
  }

  SUBCASE("jacobi violation is caught") {
    // [x1,x2]=x3 together with [x1,x3]=x1 breaks Jacobi on (1,2,3).
    LieAlgebraDef bad("nonjacobi", 3);
    bad.set_bracket(2, 0, 1, Rational(1));
    bad.set_bracket(0, 0, 2, Rational(1));
    const auto issue = validate(bad);
    REQUIRE(issue.has_value());
    CHECK(issue->kind == LieValidationIssue::Kind::jacobi);
  }
}

TEST_CASE("catalog algebras") {
  SUBCASE("su2 epsilon tensor") {
    const LieAlgebraDef su2 = catalog("su2");
    CHECK(su2.c(2, 0, 1) == Rational(1));   // C^3_{12}
    CHECK(su2.c(0, 1, 2) == Rational(1));   // C^1_{23}
    CHECK(su2.c(1, 2, 0) == Rational(1));   // C^2_{31}
    CHECK(su2.c(2, 1, 0) == Rational(-1));
    CHECK(su2.c(0, 2, 1) == Rational(-1));
    CHECK(su2.c(1, 0, 2) == Rational(-1));
    CHECK(!validate(su2));
  }
  SUBCASE("abelian(3)") {
    const LieAlgebraDef ab = catalog("abelian(3)");
    CHECK(ab.dim() == 3);
    CHECK(ab.constants().empty());
  }
  SUBCASE("kappa(2)") {
    const LieAlgebraDef k2 = catalog("kappa(2)");
    CHECK(k2.dim() == 2);
    CHECK(k2.c(1, 0, 1) == Rational(1));
    CHECK(k2.c(1, 1, 0) == Rational(-1));
    CHECK(!validate(k2));
  }
  SUBCASE("heisenberg3 bracket") {
    const LieAlgebraDef h = catalog("heisenberg3");
    CHECK(h.c(2, 0, 1) == Rational(1));
    CHECK(h.c(2, 1, 0) == Rational(-1));
  }
  CHECK_THROWS_AS(catalog("so8"), std::invalid_argument);
  CHECK_THROWS_AS(catalog("abelian()"), std::invalid_argument);
}

TEST_CASE("algebra file parsing") {
  SUBCASE("heisenberg from a file with auto-antisymmetrization") {
    const std::string text = R"({
      "name": "heis", "dim": 3, "antisymmetrize": true,
      "C": [[3, 1, 2, "1"]]
    })";
    const LieAlgebraDef def = load_algebra_text(text);
    CHECK(def.c(2, 0, 1) == Rational(1));
    CHECK(def.c(2, 1, 0) == Rational(-1));
  }
  SUBCASE("fractional coefficients parse") {
    const std::string text = R"({
      "name": "scaled", "dim": 3, "antisymmetrize": true,
      "C": [[3, 1, 2, "1/2"]]
    })";
    CHECK(load_algebra_text(text).c(2, 0, 1) == Rational(1, 2));
  }
  SUBCASE("zero denominator is a parse error") {
    const std::string text = R"({
      "name": "bad", "dim": 3, "antisymmetrize": true,
      "C": [[3, 1, 2, "1/0"]]
    })";
    CHECK_THROWS_WITH_AS(load_algebra_text(text),
                         doctest::Contains("zero denominator"), std::invalid_argument);
  }
  SUBCASE("jacobi-violating file is rejected") {
    const std::string text = R"({
      "name": "nonjacobi", "dim": 3, "antisymmetrize": true,
      "C": [[3, 1, 2, "1"], [1, 1, 3, "1"]]
    })";
    CHECK_THROWS_WITH_AS(load_algebra_text(text), doctest::Contains("validation failed"),
                         std::invalid_argument);
  }
  SUBCASE("missing fields and malformed entries") {
    CHECK_THROWS_AS(load_algebra_text("{}"), std::invalid_argument);
    CHECK_THROWS_AS(load_algebra_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(load_algebra_text(R"({"name":"x","dim":2,"antisymmetrize":true,
      "C":[[1,1,5,"1"]]})"),
                    std::invalid_argument);
  }
}

TEST_CASE("serialize round-trips the catalog") {
  for (const char* name : {"abelian(2)", "heisenberg3", "su2", "kappa(2)", "kappa(3)"}) {
    const LieAlgebraDef def = catalog(name);
    CHECK(load_algebra_text(serialize_algebra(def)) == def);
  }
}
