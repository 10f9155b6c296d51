#include <numeric>
#include <sstream>

#include "concord/signature.hpp"

namespace concord::signature {

using knots::KnotExpression;
using Kind = KnotExpression::Kind;

JumpFunction::JumpFunction(Jumps jumps) {
  for (auto& [x, j] : jumps) {
    if (x <= 0 || x >= 1) throw ValidationError("jump point " + concord::to_string(x) + " is outside (0,1)");
    if (j % 2 != 0) throw ValidationError("jump at " + concord::to_string(x) + " is odd");
    if (j != 0) jumps_.emplace(x, j);
  }
}

int JumpFunction::jump_at(const Rational& x) const {
  auto it = jumps_.find(x);
  return it == jumps_.end() ? 0 : it->second;
}

int JumpFunction::left_limit(const Rational& x) const {
  int sum = 0;
  for (auto it = jumps_.begin(); it != jumps_.end() && it->first < x; ++it) sum += it->second;
  return sum;
}

int JumpFunction::right_limit(const Rational& x) const { return left_limit(x) + jump_at(x); }

int JumpFunction::total() const {
  int sum = 0;
  for (const auto& [x, j] : jumps_) sum += j;
  return sum;
}

bool JumpFunction::is_antisymmetric() const {
  for (const auto& [x, j] : jumps_)
    if (jump_at(1 - x) != -j) return false;
  return true;
}

JumpFunction JumpFunction::operator-() const {
  JumpFunction r(*this);
  for (auto& [x, j] : r.jumps_) j = -j;
  return r;
}

JumpFunction& JumpFunction::operator+=(const JumpFunction& other) {
  for (const auto& [x, j] : other.jumps_) {
    int v = (jumps_[x] += j);
    if (v == 0) jumps_.erase(x);
  }
  return *this;
}

std::string JumpFunction::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [x, j] : jumps_) {
    if (!first) out << ", ";
    first = false;
    out << concord::to_string(x) << ": " << j;
  }
  out << "}";
  return out.str();
}

JumpFunction torus_jumps(int p, int q) {
  if (p < 2 || q < 2) throw ValidationError("torus knot T(p,q) requires p, q >= 2");
  if (std::gcd(p, q) != 1) throw ValidationError("torus knot T(p,q) requires gcd(p,q) = 1");
  JumpFunction::Jumps jumps;
  for (int i = 1; i < p; ++i) {
    for (int j = 1; j < q; ++j) {
      Rational s = make_rational(i, p) + make_rational(j, q);
      if (s < 1)
        jumps[s] += 2;
      else
        jumps[s - 1] -= 2;
    }
  }
  return JumpFunction(std::move(jumps));
}

JumpFunction expression_jumps(const KnotExpression& knot) {
  switch (knot.kind()) {
    case Kind::unknot:
    case Kind::whitehead:
      return {};
    case Kind::torus:
      return torus_jumps(knot.p(), knot.q());
    case Kind::mirror:
      return -expression_jumps(knot.inner());
    case Kind::sum: {
      JumpFunction total;
      for (const auto& t : knot.terms()) total += expression_jumps(t);
      return total;
    }
    case Kind::cable:
      if (knots::alexander(knot.inner()) != knots::LaurentPolynomial(1L))
        throw UnsupportedExpression("signature jumps of '" + knot.to_string() +
                                    "' need a companion with trivial Alexander polynomial");
      if (knot.q() < 2) return {};
      return torus_jumps(knot.p(), knot.q());
  }
  throw UnsupportedExpression("unsupported expression '" + knot.to_string() + "'");
}

JumpPointError::JumpPointError(const Rational& point, int left, int right)
    : Error("x = " + concord::to_string(point) + " is a jump point: left limit " + std::to_string(left) +
            ", right limit " + std::to_string(right)),
      point_(point),
      left_(left),
      right_(right) {}

int signature_at(const JumpFunction& jumps, const Rational& x) {
  if (x <= 0 || x >= 1) throw ValidationError("evaluation point " + concord::to_string(x) + " is outside (0,1)");
  if (jumps.jump_at(x) != 0) throw JumpPointError(x, jumps.left_limit(x), jumps.right_limit(x));
  return jumps.left_limit(x);
}

int signature_at(const KnotExpression& knot, const Rational& x) { return signature_at(expression_jumps(knot), x); }

}  // namespace concord::signature
