#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "concord/errors.hpp"
#include "concord/factor.hpp"
#include "concord/knots.hpp"
#include "support.hpp"

using namespace concord;
using namespace concord::knots;

namespace {

KnotExpression K(std::string_view text) { return KnotExpression::parse(text); }
LaurentPolynomial P(std::string_view text) { return LaurentPolynomial::parse(text); }

KnotExpression wh23() { return KnotExpression::whitehead_double(KnotExpression::torus(2, 3)); }

}  // namespace

TEST_SUITE("knots.expression") {
  TEST_CASE("normal forms") {
    CHECK(K("T(3,2)") == KnotExpression::torus(2, 3));
    CHECK(K("T(2,3)").to_string() == "T(2,3)");
    CHECK(K("--T(2,3)") == K("T(2,3)"));
    CHECK(K("-U") == KnotExpression::unknot());
    CHECK(K("U # T(2,3) # U") == K("T(2,3)"));
    CHECK(K("T(2,3) # T(2,5)") == K("T(2,5) # T(2,3)"));
    CHECK(K("-(T(2,3) # T(2,5))") == K("-T(2,3) # -T(2,5)"));
    CHECK(K("Cable(T(2,3);1,7)") == K("T(2,3)"));
    CHECK(K("Cable(U;2,5)") == K("T(2,5)"));
    CHECK(K("Cable(U;3,1)") == KnotExpression::unknot());
    CHECK(K("((T(2,3)))") == K("T(2,3)"));
    CHECK(K("Wh(T(2,3))").kind() == KnotExpression::Kind::whitehead);
    CHECK(K("Cable(Wh(T(2,3));3,4)").to_string() == "Cable(Wh(T(2,3));3,4)");
  }

  TEST_CASE("invalid input") {
    CHECK_THROWS_AS(K("T(2,4)"), ValidationError);
    CHECK_THROWS_AS(K("T(1,3)"), ValidationError);
    CHECK_THROWS_AS(K("Cable(T(2,3);2,4)"), ValidationError);
    CHECK_THROWS_AS(K("Cable(T(2,3);2,-3)"), ValidationError);
    CHECK_THROWS_AS(K("T(2,3) #"), ValidationError);
    CHECK_THROWS_AS(K("Whx(U)"), ValidationError);
    CHECK_THROWS_AS(K("T(2,3"), ValidationError);
    CHECK_THROWS_AS(K(""), ValidationError);
  }

  TEST_CASE("parse and print round trip on random expressions") {
    auto rng = testing_support::engine(21);
    for (int i = 0; i < 500; ++i) {
      auto e = testing_support::random_expression(rng, 4);
      auto again = K(e.to_string());
      REQUIRE(again == e);
      CHECK(again.to_string() == e.to_string());
    }
  }
}

TEST_SUITE("knots.alexander") {
  TEST_CASE("examples") {
    CHECK(alexander(K("T(2,3)")) == P("t - 1 + t^-1"));
    CHECK(alexander(wh23()) == 1);
    CHECK(alexander(family(Family::J, 2).knot) == alexander(K("T(2,3)")).pow(2));
    CHECK(alexander(KnotExpression::unknot()) == 1);
    CHECK(torus_alexander(3, 5).max_exponent() == 4);
    CHECK(torus_alexander(3, 5) == torus_alexander(5, 3));
  }

  TEST_CASE("cable formula") {
    auto companion = K("T(2,3)");
    auto expected = (alexander(companion).substitute_power(2) * torus_alexander(2, 5)).centered();
    CHECK(alexander(KnotExpression::cable(companion, 2, 5)) == expected);
  }

  TEST_CASE("mirror and sum laws on random expressions") {
    auto rng = testing_support::engine(22);
    for (int i = 0; i < 500; ++i) {
      auto a = testing_support::random_expression(rng, 3);
      auto b = testing_support::random_expression(rng, 3);
      CHECK(alexander(-a) == alexander(a));
      CHECK(alexander(a + b) == alexander(a) * alexander(b));
      auto d = alexander(a);
      CHECK(d.value_at_one() == 1);
      CHECK(d == d.reciprocal());
    }
  }

  TEST_CASE("breadth is at most twice the genus") {
    auto rng = testing_support::engine(23);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
      auto e = testing_support::random_expression(rng, 3);
      int g = genus(e).seifert_genus;
      CHECK(laurent::breadth(alexander(e)) <= 2 * g);
      ++checked;
    }
    CHECK(checked == 500);
  }
}

TEST_SUITE("knots.genus") {
  TEST_CASE("examples") {
    CHECK(genus(K("T(3,5)")).seifert_genus == 4);
    CHECK(genus(KnotExpression::unknot()).seifert_genus == 0);
    CHECK(genus(wh23()).seifert_genus == 1);
    for (int n = 2; n <= 12; ++n) {
      auto r = genus(family(Family::L, n));
      CHECK(r.seifert_genus == 2 * n - 1);
      CHECK(r.summand_max_genus == n);
      REQUIRE(r.slice_genus_hint.has_value());
      CHECK(r.slice_genus_hint->value == 1);
      CHECK(r.slice_genus_hint->provenance.origin == Origin::published);
    }
    CHECK_FALSE(genus(family(Family::J, 3)).slice_genus_hint.has_value());
  }

  TEST_CASE("cables") {
    // g(K_{p,q}) = p g(K) + (p-1)(q-1)/2
    CHECK(genus(K("Cable(T(2,3);2,5)")).seifert_genus == 2 * 1 + 2);
    CHECK(genus(K("Cable(Wh(T(2,3));3,4)")).seifert_genus == 3 + 3);
  }
}

TEST_SUITE("knots.family") {
  TEST_CASE("definitions") {
    CHECK(family(Family::J, 2).knot == KnotExpression::cable(wh23(), 2, 3) + -K("T(2,3)"));
    CHECK(family(Family::Jprime, 3).knot == KnotExpression::cable(wh23(), 3, 5) + -K("T(3,5)"));
    CHECK(family(Family::L, 2).knot == KnotExpression::cable(wh23(), 2, 1) + -wh23());
    CHECK(family(Family::J, 3).label == "J_3");
    CHECK(family(Family::Jprime, 3).label == "J'_3");
    CHECK(family(Family::L, 3).label == "L_3");
    CHECK_THROWS_AS(family(Family::J, 1), RangeError);
    CHECK(parse_family("J'") == Family::Jprime);
    CHECK(parse_family("Jprime") == Family::Jprime);
    CHECK_THROWS_AS(parse_family("X"), ValidationError);
  }

  TEST_CASE("J_n is algebraically slice with the square of a torus polynomial") {
    for (int n = 2; n <= 12; ++n) {
      auto d = alexander(family(Family::J, n).knot);
      CHECK(d == torus_alexander(n, n + 1).pow(2));
      CHECK(laurent::fox_milnor(d).passes);
    }
  }

  TEST_CASE("splitting genus bounds are ordered on every family member") {
    for (auto f : {Family::J, Family::Jprime, Family::L}) {
      for (int n = 2; n <= 12; ++n) {
        auto m = family(f, n);
        auto r = gsp_bound_of_knot(m.knot);
        CHECK(r.lower <= r.upper);
        CHECK(r.upper == genus(m).summand_max_genus);
      }
    }
  }
}

TEST_SUITE("knots.gsp") {
  TEST_CASE("examples") {
    auto t35 = gsp_bound_of_knot(K("T(3,5)"));
    CHECK(t35.lower == 4);
    CHECK(t35.upper == 4);
    auto slice = gsp_bound_of_knot(K("T(2,3) # -T(2,3)"));
    CHECK(slice.lower == 0);
    CHECK(slice.upper == 1);
    auto u = gsp_bound_of_knot(KnotExpression::unknot());
    CHECK(u.lower == 0);
    CHECK(u.upper == 0);
  }
}
