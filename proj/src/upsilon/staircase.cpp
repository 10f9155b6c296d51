#include <algorithm>

#include "concord/errors.hpp"
#include "concord/upsilon.hpp"

namespace concord::upsilon {

Staircase staircase_from_alexander(const knots::LaurentPolynomial& f) {
  if (f.is_zero()) throw NotLSpacePolynomial("zero polynomial");
  std::vector<int> exponents;
  int expected = 1;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (it->second != expected)
      throw NotLSpacePolynomial("coefficients of " + f.pretty() + " do not alternate +1, -1 from the top");
    expected = -expected;
    exponents.push_back(it->first);
  }
  if (exponents.size() % 2 == 0) throw NotLSpacePolynomial("alternating form must end in +1: " + f.pretty());
  // Centre so that the top exponent is the genus.
  int shift = (exponents.front() + exponents.back());
  if (shift % 2 != 0) throw NotLSpacePolynomial("odd breadth: " + f.pretty());
  for (int& e : exponents) e -= shift / 2;

  Staircase s;
  int i = 0;
  int j = exponents.front();
  s.even_corners.emplace_back(i, j);
  for (std::size_t r = 0; r + 2 < exponents.size() + 1; r += 2) {
    i += exponents[r] - exponents[r + 1];
    j -= exponents[r + 1] - exponents[r + 2];
    s.even_corners.emplace_back(i, j);
  }
  int g = exponents.front();
  if (s.even_corners.back() != std::make_pair(g, 0))
    throw NotLSpacePolynomial("staircase of " + f.pretty() + " does not end at (g, 0)");
  for (std::size_t r = 0; r < s.even_corners.size(); ++r) {
    auto [a, b] = s.even_corners[r];
    auto [c, d] = s.even_corners[s.even_corners.size() - 1 - r];
    if (a != d || b != c) throw NotLSpacePolynomial("staircase of " + f.pretty() + " is not symmetric");
  }
  return s;
}

PiecewiseLinearFunction upsilon_from_staircase(const Staircase& staircase) {
  if (staircase.even_corners.empty()) throw ValidationError("staircase has no corners");
  // Each corner contributes the line t -> -2 i - t (j - i).
  struct Line {
    Rational intercept;
    Rational slope;
  };
  std::vector<Line> lines;
  for (auto [i, j] : staircase.even_corners) lines.push_back({Rational(-2 * i), Rational(i - j)});

  auto value = [&](const Rational& t) {
    Rational best = lines.front().intercept + lines.front().slope * t;
    for (const auto& l : lines) best = std::max<Rational>(best, l.intercept + l.slope * t);
    return best;
  };

  std::vector<Rational> ts{0, 2};
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (lines[a].slope == lines[b].slope) continue;
      Rational t = (lines[b].intercept - lines[a].intercept) / (lines[a].slope - lines[b].slope);
      if (t > 0 && t < 2) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<PiecewiseLinearFunction::Point> points;
  for (const auto& t : ts) points.push_back({t, value(t)});
  return PiecewiseLinearFunction(std::move(points));
}

PiecewiseLinearFunction upsilon_torus(int p, int q) {
  return upsilon_from_staircase(staircase_from_alexander(knots::torus_alexander(p, q)));
}

PiecewiseLinearFunction upsilon_of(const knots::KnotExpression& knot) {
  using Kind = knots::KnotExpression::Kind;
  switch (knot.kind()) {
    case Kind::unknot:
      return {};
    case Kind::torus:
      return upsilon_torus(knot.p(), knot.q());
    case Kind::mirror:
      return -upsilon_of(knot.inner());
    case Kind::sum: {
      PiecewiseLinearFunction total;
      for (const auto& t : knot.terms()) total = total + upsilon_of(t);
      return total;
    }
    default:
      break;
  }
  throw UnsupportedExpression("Upsilon of '" + knot.to_string() +
                              "' is not computed; only torus knots, mirrors and sums are supported");
}

}  // namespace concord::upsilon
