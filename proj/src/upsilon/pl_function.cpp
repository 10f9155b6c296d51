#include <algorithm>
#include <sstream>

#include "concord/errors.hpp"
#include "concord/upsilon.hpp"

namespace concord::upsilon {

namespace {

using Point = PiecewiseLinearFunction::Point;

Rational slope(const Point& a, const Point& b) { return (b.value - a.value) / (b.t - a.t); }

void drop_collinear(std::vector<Point>& points) {
  std::vector<Point> kept;
  kept.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (kept.size() >= 1 && i + 1 < points.size() && slope(kept.back(), points[i]) == slope(points[i], points[i + 1]))
      continue;
    kept.push_back(points[i]);
  }
  points = std::move(kept);
}

}  // namespace

PiecewiseLinearFunction::PiecewiseLinearFunction() : points_{{0, 0}, {2, 0}} {}

PiecewiseLinearFunction::PiecewiseLinearFunction(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ValidationError("a piecewise-linear function needs at least two breakpoints");
  if (points_.front().t != 0 || points_.back().t != 2)
    throw ValidationError("breakpoints must start at t = 0 and end at t = 2");
  if (points_.front().value != 0) throw ValidationError("value at t = 0 must be 0");
  for (std::size_t i = 1; i < points_.size(); ++i)
    if (points_[i].t <= points_[i - 1].t) throw ValidationError("breakpoints must be strictly increasing");
  drop_collinear(points_);
}

Rational PiecewiseLinearFunction::operator()(const Rational& t) const {
  if (t < 0 || t > 2) throw ValidationError("t = " + concord::to_string(t) + " is outside [0,2]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t, [](const Point& p, const Rational& x) { return p.t < x; });
  if (it->t == t) return it->value;
  const Point& b = *it;
  const Point& a = *(it - 1);
  return a.value + slope(a, b) * (t - a.t);
}

Rational PiecewiseLinearFunction::left_slope(const Rational& t) const {
  if (t <= 0 || t > 2) throw ValidationError("left slope needs t in (0,2]");
  auto it = std::lower_bound(points_.begin(), points_.end(), t, [](const Point& p, const Rational& x) { return p.t < x; });
  return slope(*(it - 1), *it);
}

Rational PiecewiseLinearFunction::right_slope(const Rational& t) const {
  if (t < 0 || t >= 2) throw ValidationError("right slope needs t in [0,2)");
  auto it = std::upper_bound(points_.begin(), points_.end(), t, [](const Rational& x, const Point& p) { return x < p.t; });
  return slope(*(it - 1), *it);
}

std::vector<Rational> PiecewiseLinearFunction::singularities() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) out.push_back(points_[i].t);
  return out;
}

PiecewiseLinearFunction PiecewiseLinearFunction::operator-() const {
  PiecewiseLinearFunction r(*this);
  for (auto& p : r.points_) p.value = -p.value;
  return r;
}

PiecewiseLinearFunction PiecewiseLinearFunction::scaled(const Integer& factor) const {
  if (factor == 0) return {};
  PiecewiseLinearFunction r(*this);
  for (auto& p : r.points_) p.value *= factor;
  return r;
}

PiecewiseLinearFunction operator+(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b) {
  std::vector<Rational> ts;
  for (const auto& p : a.points_) ts.push_back(p.t);
  for (const auto& p : b.points_) ts.push_back(p.t);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Point> points;
  points.reserve(ts.size());
  for (const auto& t : ts) points.push_back({t, a(t) + b(t)});
  return PiecewiseLinearFunction(std::move(points));
}

std::string PiecewiseLinearFunction::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) out << ", ";
    out << concord::to_string(points_[i].t) << ":" << concord::to_string(points_[i].value);
  }
  return out.str();
}

PiecewiseLinearFunction pl_arithmetic(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g, PLOp op,
                                      const Integer& factor) {
  switch (op) {
    case PLOp::add:
      return f + g;
    case PLOp::negate:
      return -f;
    case PLOp::integer_scale:
      return f.scaled(factor);
  }
  return f;
}

Rational delta_prime(const PiecewiseLinearFunction& f, const Rational& t0) {
  if (t0 <= 0 || t0 >= 2) throw ValidationError("delta_prime needs t0 in (0,2), got " + to_string(t0));
  return f.right_slope(t0) - f.left_slope(t0);
}

}  // namespace concord::upsilon
