#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "concord/errors.hpp"
#include "concord/upsilon.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

using namespace concord;
using namespace concord::upsilon;
using knots::KnotExpression;
using Point = PiecewiseLinearFunction::Point;

namespace {

Rational R(long n, long d = 1) { return make_rational(n, d); }

std::vector<std::pair<int, int>> coprime_pairs(int max_product) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * (p + 1) <= max_product; ++p)
    for (int q = p + 1; p * q <= max_product; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

/// Random PL function with integer slopes on a grid of denominator `den`.
PiecewiseLinearFunction random_pl(std::mt19937_64& rng, long den = 6) {
  std::vector<Point> pts{{R(0), R(0)}};
  Rational value = 0;
  long last = 0;
  while (last < 2 * den) {
    long next = std::min(2 * den, last + testing_support::draw(rng, 1, den));
    Rational slope = R(testing_support::draw(rng, -5, 5));
    value += slope * R(next - last, den);
    pts.push_back({R(next, den), value});
    last = next;
  }
  return PiecewiseLinearFunction(pts);
}

const Check* find_check(const std::vector<Check>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("upsilon.pl") {
  TEST_CASE("construction") {
    CHECK(PiecewiseLinearFunction().is_zero());
    PiecewiseLinearFunction f({{R(0), R(0)}, {R(1, 2), R(-1, 2)}, {R(1), R(-1)}, {R(2), R(0)}});
    CHECK(f.points().size() == 3);  // collinear breakpoint at 1/2 removed
    CHECK(f.to_string() == "0:0, 1:-1, 2:0");
    CHECK_THROWS_AS(PiecewiseLinearFunction({{R(0), R(1)}, {R(2), R(0)}}), ValidationError);
    CHECK_THROWS_AS(PiecewiseLinearFunction({{R(0), R(0)}, {R(1), R(0)}}), ValidationError);
    CHECK_THROWS_AS(PiecewiseLinearFunction({{R(0), R(0)}, {R(1), R(0)}, {R(1), R(1)}, {R(2), R(0)}}),
                    ValidationError);
  }

  TEST_CASE("arithmetic examples") {
    auto f = upsilon_torus(2, 3);
    CHECK(pl_arithmetic(f, -f, PLOp::add).is_zero());
    CHECK(pl_arithmetic(f, {}, PLOp::negate) == -f);
    auto doubled = pl_arithmetic(f, {}, PLOp::integer_scale, 2);
    CHECK(doubled == PiecewiseLinearFunction({{R(0), R(0)}, {R(1), R(-2)}, {R(2), R(0)}}));
    CHECK(doubled(R(1, 2)) == R(-1));
    CHECK(doubled(R(3, 2)) == R(3) - R(4));
  }

  TEST_CASE("addition and negation laws on random functions") {
    auto rng = testing_support::engine(41);
    for (int i = 0; i < 300; ++i) {
      auto f = random_pl(rng);
      auto g = random_pl(rng, 4);
      auto h = random_pl(rng, 3);
      CHECK(f + g == g + f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f - f).is_zero());
      CHECK(-(-f) == f);
      CHECK(-(f + g) == -f + -g);
      CHECK(f.scaled(3) == f + f + f);
      for (long k = 0; k <= 24; ++k) {
        Rational t = R(k, 12);
        CHECK((f + g)(t) == f(t) + g(t));
      }
    }
  }

  TEST_CASE("delta prime and slopes") {
    auto f = upsilon_torus(2, 3);
    CHECK(f(R(1)) == -1);
    CHECK(delta_prime(f, R(1)) == 2);
    CHECK(delta_prime(f, R(1, 2)) == 0);
    CHECK(f.left_slope(R(1)) == -1);
    CHECK(f.right_slope(R(1)) == 1);
    CHECK_THROWS_AS(delta_prime(f, R(0)), ValidationError);
    CHECK_THROWS_AS(delta_prime(f, R(2)), ValidationError);

    auto rng = testing_support::engine(42);
    for (int i = 0; i < 300; ++i) {
      auto a = random_pl(rng);
      auto b = random_pl(rng, 4);
      auto sum = pl_arithmetic(a, b, PLOp::add);
      for (long k = 1; k < 24; ++k) {
        Rational t = R(k, 12);
        CHECK(delta_prime(sum, t) == delta_prime(a, t) + delta_prime(b, t));
      }
      for (auto [p, q] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {1, 1}, {5, 6}, {3, 2}}) {
        CHECK(oss_hom(sum, p, q) == oss_hom(a, p, q) + oss_hom(b, p, q));
      }
    }
  }
}

TEST_SUITE("upsilon.staircase") {
  TEST_CASE("examples") {
    using C = std::vector<std::pair<int, int>>;
    CHECK(staircase_from_alexander(knots::torus_alexander(2, 3)).even_corners == C{{0, 1}, {1, 0}});
    CHECK(staircase_from_alexander(knots::torus_alexander(3, 4)).even_corners == C{{0, 3}, {1, 1}, {3, 0}});
    CHECK(staircase_from_alexander(knots::torus_alexander(2, 7)).even_corners == C{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
    CHECK_THROWS_AS(staircase_from_alexander(laurent::LaurentPolynomial::parse("2t - 3 + 2t^-1")),
                    NotLSpacePolynomial);
  }

  TEST_CASE("upsilon from corners") {
    CHECK(upsilon_from_staircase({{{0, 1}, {1, 0}}}).to_string() == "0:0, 1:-1, 2:0");
    auto t34 = upsilon_from_staircase({{{0, 3}, {1, 1}, {3, 0}}});
    CHECK(t34 == PiecewiseLinearFunction({{R(0), R(0)}, {R(2, 3), R(-2)}, {R(4, 3), R(-2)}, {R(2), R(0)}}));
    for (int g = 1; g <= 6; ++g) CHECK(upsilon_from_staircase({{{0, g}, {g, 0}}}).right_slope(R(0)) == -g);
  }

  TEST_CASE("torus examples") {
    CHECK(upsilon_torus(2, 3) == PiecewiseLinearFunction({{R(0), R(0)}, {R(1), R(-1)}, {R(2), R(0)}}));
    CHECK(upsilon_torus(3, 4).singularities().front() == R(2, 3));
    CHECK(upsilon_torus(2, 7).singularities().front() == R(1));
  }

  TEST_CASE("agrees with the semigroup formula") {
    for (auto [p, q] : coprime_pairs(63)) {
      auto f = upsilon_torus(p, q);
      for (long k = 0; k <= 120; ++k) {
        Rational t = R(k, 60);
        CHECK(f(t) == oracle::torus_upsilon_semigroup(p, q, t));
      }
      for (const auto& pt : f.points()) CHECK(pt.value == oracle::torus_upsilon_semigroup(p, q, pt.t));
    }
  }

  TEST_CASE("symmetry, slope at zero, genus bound and integrality") {
    for (auto [p, q] : coprime_pairs(63)) {
      CAPTURE(p);
      CAPTURE(q);
      auto f = upsilon_torus(p, q);
      int g = (p - 1) * (q - 1) / 2;
      CHECK(f(R(0)) == 0);
      CHECK(f.right_slope(R(0)) == -g);
      for (const auto& pt : f.points()) CHECK(f(R(2) - pt.t) == pt.value);
      for (const auto& s : f.singularities()) {
        long num = s.get_num().get_si();
        long den = s.get_den().get_si();
        CHECK(min_genus_from_singularity(num, den) <= g);
        Rational h = oss_hom(f, num, den);
        CHECK(h.get_den() == 1);
      }
    }
  }

  TEST_CASE("expressions") {
    auto k = KnotExpression::parse("T(2,3) # -T(3,4)");
    CHECK(upsilon_of(k) == upsilon_torus(2, 3) - upsilon_torus(3, 4));
    CHECK(upsilon_of(KnotExpression::unknot()).is_zero());
    CHECK_THROWS_AS(upsilon_of(KnotExpression::parse("Wh(T(2,3))")), UnsupportedExpression);
  }
}

TEST_SUITE("upsilon.germ") {
  TEST_CASE("published germs") {
    auto g2 = jprime_germ(2);
    CHECK(g2.first_singularity == R(2, 3));
    CHECK(g2.jump_value == 3);
    CHECK(g2.provenance.origin == Origin::published);
    auto g5 = jprime_germ(5);
    CHECK(g5.first_singularity == R(2, 9));
    CHECK(g5.jump_value == 9);
    CHECK((-g5).jump_value == -9);
    CHECK_THROWS_AS(jprime_germ(1), RangeError);
    CHECK_THROWS_AS(JumpGerm::make(R(1, 2), R(0), true, {}), ValidationError);
    CHECK_THROWS_AS(JumpGerm::make(R(2), R(1), true, {}), ValidationError);
  }

  TEST_CASE("oss homomorphism on germs") {
    for (int n = 2; n <= 20; ++n) {
      CHECK(oss_hom(jprime_germ(n), 2, 2L * n - 1) == 1);
      for (long q = 2L * n; q <= 2L * n + 12; ++q) {
        if (std::gcd(2L, q) == 1) CHECK(oss_hom(jprime_germ(n), 2, q) == 0);
        if (q > 2L * n - 1) CHECK(oss_hom(jprime_germ(n), 1, q) == 0);
      }
      CHECK_THROWS_AS(oss_hom(jprime_germ(n), 1, 1), InsufficientData);
    }
    CHECK(oss_hom(upsilon_torus(2, 3), 1, 1) == 1);
    CHECK_THROWS_AS(oss_hom(upsilon_torus(2, 3), 2, 4), ValidationError);
    CHECK_THROWS_AS(oss_hom(upsilon_torus(2, 3), 5, 2), ValidationError);
  }

  TEST_CASE("minimal genus") {
    CHECK(min_genus_from_singularity(2, 3) == 2);
    CHECK(min_genus_from_singularity(1, 3) == 3);
    CHECK(min_genus_from_singularity(1, 1) == 1);
  }
}

TEST_SUITE("upsilon.obstruction") {
  TEST_CASE("examples") {
    for (int k = 2; k <= 8; ++k) {
      for (int n = k; n <= 12; ++n) {
        auto r = obstruct_Gn(jprime_germ(n), k - 1);
        CHECK(r.verdict == Verdict::obstructed);
        REQUIRE(r.witness.has_value());
        CHECK(*r.witness == R(2, 2 * n - 1));
      }
    }
    CHECK(obstruct_Gn(upsilon_torus(2, 3), 1).verdict == Verdict::not_obstructed);
    CHECK(obstruct_Gn(PiecewiseLinearFunction(), 4).verdict == Verdict::not_obstructed);
    CHECK(obstruct_Gn(upsilon_torus(3, 4), 1).verdict == Verdict::obstructed);
    CHECK(obstruct_Gn(jprime_germ(2), 2).verdict == Verdict::not_obstructed);
    auto blind = JumpGerm::make(R(2, 3), R(3), false, {Origin::user_supplied, "test"});
    CHECK(obstruct_Gn(blind, 2).verdict == Verdict::inconclusive);
    CHECK(obstruct_Gn(blind, 1).verdict == Verdict::obstructed);
    CHECK(to_string(Verdict::not_obstructed) == "not_obstructed");
  }

  TEST_CASE("genus bound consistency") {
    // a genus g knot is never obstructed from G_g
    for (auto [p, q] : coprime_pairs(63)) {
      int g = (p - 1) * (q - 1) / 2;
      CHECK(obstruct_Gn(upsilon_torus(p, q), g).verdict == Verdict::not_obstructed);
    }
  }
}

TEST_SUITE("upsilon.certificate") {
  TEST_CASE("k = 2, N = 6") {
    auto c = summand_certificate_upsilon(2, 6);
    CHECK(c.valid());
    REQUIRE(c.matrix.size() == 5);
    for (std::size_t r = 0; r < 5; ++r) {
      REQUIRE(c.matrix[r].size() == 5);
      CHECK(c.matrix[r][r] == R(1));
      for (std::size_t m = r + 1; m < 5; ++m) CHECK(c.matrix[r][m] == R(0));
      for (std::size_t m = 0; m < r; ++m) CHECK_FALSE(c.matrix[r][m].has_value());
    }
    CHECK(c.provenance.size() == 5);
  }

  TEST_CASE("single generator and ranges") {
    auto c = summand_certificate_upsilon(3, 3);
    CHECK(c.valid());
    CHECK(find_check(c.checks, "evaluation_points_in_range")->passed);
    CHECK_THROWS_AS(summand_certificate_upsilon(2, 1), RangeError);
    CHECK_THROWS_AS(summand_certificate_upsilon(1, 4), RangeError);
    for (int k = 2; k <= 10; ++k) CHECK(summand_certificate_upsilon(k, 14).valid());
  }
}
