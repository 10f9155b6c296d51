#include <algorithm>
#include <numeric>

#include "concord/errors.hpp"
#include "concord/factor.hpp"
#include "concord/knots.hpp"

namespace concord::knots {

using Kind = KnotExpression::Kind;

LaurentPolynomial torus_alexander(int p, int q) {
  if (p < 2 || q < 2) throw ValidationError("torus knot T(p,q) requires p, q >= 2");
  if (std::gcd(p, q) != 1) throw ValidationError("torus knot T(p,q) requires gcd(p,q) = 1");
  auto binomial = [](int e) { return LaurentPolynomial::monomial(1, e) - LaurentPolynomial(1L); };
  auto quotient = laurent::divide_exact(binomial(p * q) * binomial(1), binomial(p) * binomial(q));
  if (!quotient) throw Error("internal: torus Alexander quotient is not exact");
  return quotient->centered();
}

LaurentPolynomial alexander(const KnotExpression& knot) {
  switch (knot.kind()) {
    case Kind::unknot:
    case Kind::whitehead:
      return LaurentPolynomial(1L);
    case Kind::torus:
      return torus_alexander(knot.p(), knot.q());
    case Kind::mirror:
      return alexander(knot.inner());
    case Kind::cable: {
      LaurentPolynomial companion = alexander(knot.inner()).substitute_power(knot.p());
      if (knot.q() < 2) return companion;
      return companion * torus_alexander(knot.p(), knot.q());
    }
    case Kind::sum: {
      LaurentPolynomial product(1L);
      for (const auto& t : knot.terms()) product *= alexander(t);
      return product;
    }
  }
  throw ValidationError("malformed knot expression");
}

namespace {

int seifert_genus(const KnotExpression& knot) {
  switch (knot.kind()) {
    case Kind::unknot:
      return 0;
    case Kind::torus:
      return (knot.p() - 1) * (knot.q() - 1) / 2;
    case Kind::whitehead:
      return 1;
    case Kind::mirror:
      return seifert_genus(knot.inner());
    case Kind::cable:
      if (knot.q() <= 0) throw UnsupportedExpression("genus of a cable with q <= 0 is not supported");
      return knot.p() * seifert_genus(knot.inner()) + (knot.p() - 1) * (knot.q() - 1) / 2;
    case Kind::sum: {
      int total = 0;
      for (const auto& t : knot.terms()) total += seifert_genus(t);
      return total;
    }
  }
  throw ValidationError("malformed knot expression");
}

}  // namespace

GenusReport genus(const KnotExpression& knot) {
  GenusReport report;
  report.seifert_genus = seifert_genus(knot);
  if (knot.kind() == Kind::sum) {
    for (const auto& t : knot.terms()) report.summand_max_genus = std::max(report.summand_max_genus, seifert_genus(t));
  } else {
    report.summand_max_genus = report.seifert_genus;
  }
  return report;
}

std::string to_string(Family family) {
  switch (family) {
    case Family::J:
      return "J";
    case Family::Jprime:
      return "Jprime";
    case Family::L:
      return "L";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "J") return Family::J;
  if (name == "Jprime" || name == "J'") return Family::Jprime;
  if (name == "L") return Family::L;
  throw ValidationError("unknown family '" + std::string(name) + "' (expected J, Jprime or L)");
}

FamilyMember family(Family name, int n) {
  if (n < 2) throw RangeError("family index must be >= 2, got " + std::to_string(n));
  const KnotExpression wh = KnotExpression::whitehead_double(KnotExpression::torus(2, 3));
  FamilyMember member{name, n, "", KnotExpression::unknot(), std::nullopt};
  switch (name) {
    case Family::J:
      member.label = "J_" + std::to_string(n);
      member.knot = KnotExpression::cable(wh, n, n + 1) + -KnotExpression::torus(n, n + 1);
      break;
    case Family::Jprime:
      member.label = "J'_" + std::to_string(n);
      member.knot = KnotExpression::cable(wh, n, 2 * n - 1) + -KnotExpression::torus(n, 2 * n - 1);
      break;
    case Family::L:
      member.label = "L_" + std::to_string(n);
      member.knot = KnotExpression::cable(wh, n, 1) + -KnotExpression::cable(wh, n - 1, 1);
      member.slice_genus_hint = SliceGenusHint{1, Provenance{Origin::published, "slice genus of L_n"}};
      break;
  }
  return member;
}

GenusReport genus(const FamilyMember& member) {
  GenusReport report = genus(member.knot);
  report.slice_genus_hint = member.slice_genus_hint;
  return report;
}

SplittingGenusRange gsp_bound_of_knot(const KnotExpression& knot) {
  return {laurent::gsp_lower_bound(alexander(knot)).bound, Rational(genus(knot).summand_max_genus)};
}

}  // namespace concord::knots
