#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "concord/certificate.hpp"
#include "concord/knots.hpp"
#include "concord/numeric.hpp"

namespace concord::upsilon {

using concord::to_string;

/// Continuous piecewise-linear function on [0,2] with value 0 at t = 0,
/// stored as breakpoints with exact rational coordinates. Collinear interior
/// breakpoints are removed, so every stored interior breakpoint is a kink.
class PiecewiseLinearFunction {
 public:
  struct Point {
    Rational t;
    Rational value;
    friend bool operator==(const Point&, const Point&) = default;
  };

  /// The zero function.
  PiecewiseLinearFunction();
  /// Requires t strictly increasing from 0 to 2 and value 0 at t = 0.
  explicit PiecewiseLinearFunction(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  bool is_zero() const { return points_.size() == 2 && points_[1].value == 0; }

  Rational operator()(const Rational& t) const;
  /// Slopes of the adjacent linear pieces; t in (0,2] resp. [0,2).
  Rational left_slope(const Rational& t) const;
  Rational right_slope(const Rational& t) const;
  /// Interior kinks, increasing.
  std::vector<Rational> singularities() const;

  PiecewiseLinearFunction operator-() const;
  PiecewiseLinearFunction scaled(const Integer& factor) const;
  friend PiecewiseLinearFunction operator+(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b);
  friend PiecewiseLinearFunction operator-(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b) {
    return a + -b;
  }
  friend bool operator==(const PiecewiseLinearFunction& a, const PiecewiseLinearFunction& b) {
    return a.points_ == b.points_;
  }

  /// e.g. "0:0, 1:-1, 2:0"
  std::string to_string() const;

 private:
  std::vector<Point> points_;
};

enum class PLOp { add, negate, integer_scale };

/// add: f + g; negate: -f; integer_scale: factor * f. g is ignored unless op is add.
PiecewiseLinearFunction pl_arithmetic(const PiecewiseLinearFunction& f, const PiecewiseLinearFunction& g, PLOp op,
                                      const Integer& factor = 1);

/// Right slope minus left slope at t0 in (0,2); ValidationError otherwise.
Rational delta_prime(const PiecewiseLinearFunction& f, const Rational& t0);

/// Partial data: Delta Upsilon' vanishes on (0, first_singularity) when
/// zero_before holds, and equals jump_value at first_singularity. Nothing is
/// known beyond first_singularity.
struct JumpGerm {
  Rational first_singularity;
  Rational jump_value;
  bool zero_before = true;
  Provenance provenance;

  /// Validates first_singularity in (0,2) and jump_value != 0.
  static JumpGerm make(Rational first_singularity, Rational jump_value, bool zero_before, Provenance provenance);
  JumpGerm operator-() const;
};

/// Published germ of J'_n: singularity 2/(2n-1) with jump 2n-1. Requires n >= 2.
JumpGerm jprime_germ(int n);

/// Even corners of a staircase complex, from (0,g) to (g,0).
struct Staircase {
  std::vector<std::pair<int, int>> even_corners;

  int genus() const { return even_corners.empty() ? 0 : even_corners.front().second; }
};

/// Staircase of a polynomial whose nonzero coefficients alternate +1, -1, ..., +1
/// from the top exponent down. Throws NotLSpacePolynomial otherwise.
Staircase staircase_from_alexander(const knots::LaurentPolynomial& f);

/// Upsilon(t) = -2 min over corners (i,j) of ((1 - t/2) i + (t/2) j).
PiecewiseLinearFunction upsilon_from_staircase(const Staircase& staircase);

PiecewiseLinearFunction upsilon_torus(int p, int q);

/// Upsilon of torus knots and their mirrors and sums; UnsupportedExpression otherwise.
PiecewiseLinearFunction upsilon_of(const knots::KnotExpression& knot);

using UpsilonSource = std::variant<PiecewiseLinearFunction, JumpGerm>;

/// (1/q) Delta Upsilon'(p/q) for p even, (1/(2q)) Delta Upsilon'(p/q) for p odd.
/// Requires gcd(p,q) = 1 and 0 < p/q < 2. A germ queried outside its certified
/// range throws InsufficientData.
Rational oss_hom(const UpsilonSource& source, long p, long q);

/// Least genus compatible with a singularity at the reduced fraction p/q:
/// q for p odd, ceil(q/2) for p even.
long min_genus_from_singularity(long p, long q);

enum class Verdict { obstructed, not_obstructed, inconclusive };

std::string to_string(Verdict verdict);

struct ObstructionResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Rational> witness;  // singularity inside (0, 1/n)
  std::string reason;
};

/// Obstructed iff Delta Upsilon' is nonzero at some t in (0, 1/n), strictly.
ObstructionResult obstruct_Gn(const UpsilonSource& source, int n);

/// Matrix with rows J'_n and columns phi_m (m, n in [k, N]), entry
/// oss_hom(jprime_germ(n), 2, 2m - 1) where the germ determines it and
/// nullopt where it does not (m < n).
struct UpsilonCertificate {
  int k = 0;
  int max_index = 0;
  std::vector<std::vector<std::optional<Rational>>> matrix;
  std::vector<Check> checks;
  std::vector<Provenance> provenance;

  bool valid() const { return all_passed(checks); }
};

/// Requires 2 <= k <= N; RangeError otherwise.
UpsilonCertificate summand_certificate_upsilon(int k, int max_index);

}  // namespace concord::upsilon
