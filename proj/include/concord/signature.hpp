#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "concord/certificate.hpp"
#include "concord/errors.hpp"
#include "concord/knots.hpp"
#include "concord/numeric.hpp"

namespace concord::signature {

/// Jumps of a Tristram-Levine signature function x -> sigma at omega = e^{2 pi i x},
/// stored as point in (0,1) -> nonzero even jump.
class JumpFunction {
 public:
  using Jumps = std::map<Rational, int>;

  JumpFunction() = default;
  /// Drops zero jumps; throws ValidationError for points outside (0,1) or odd jumps.
  explicit JumpFunction(Jumps jumps);

  const Jumps& jumps() const { return jumps_; }
  bool empty() const { return jumps_.empty(); }
  std::size_t size() const { return jumps_.size(); }

  int jump_at(const Rational& x) const;
  /// Sum of jumps at points < x.
  int left_limit(const Rational& x) const;
  /// Sum of jumps at points <= x.
  int right_limit(const Rational& x) const;
  int total() const;
  /// jump(1 - x) = -jump(x) for every stored x.
  bool is_antisymmetric() const;

  JumpFunction operator-() const;
  JumpFunction& operator+=(const JumpFunction& other);
  friend JumpFunction operator+(JumpFunction a, const JumpFunction& b) { return a += b; }
  friend JumpFunction operator-(JumpFunction a, const JumpFunction& b) { return a += -b; }
  friend bool operator==(const JumpFunction& a, const JumpFunction& b) { return a.jumps_ == b.jumps_; }

  /// e.g. "{1/6: -2, 5/6: 2}"
  std::string to_string() const;

 private:
  Jumps jumps_;
};

/// With S the multiset {i/p + j/q : 0 < i < p, 0 < j < q}: +2 at each s in S
/// below 1 and -2 at s - 1 for each s above 1.
JumpFunction torus_jumps(int p, int q);

/// Jumps of torus knots, Whitehead doubles, cables of Alexander-trivial
/// companions, and their mirrors and sums. Throws UnsupportedExpression otherwise.
JumpFunction expression_jumps(const knots::KnotExpression& knot);

/// Evaluation exactly at a discontinuity.
class JumpPointError : public Error {
 public:
  JumpPointError(const Rational& point, int left, int right);
  const Rational& point() const { return point_; }
  int left() const { return left_; }
  int right() const { return right_; }

 private:
  Rational point_;
  int left_;
  int right_;
};

/// Signature at x in (0,1); throws JumpPointError at a jump, ValidationError outside (0,1).
int signature_at(const JumpFunction& jumps, const Rational& x);
int signature_at(const knots::KnotExpression& knot, const Rational& x);

/// Braid word on `strands` strands; generator +-i is sigma_i^{+-1}, 1 <= i < strands.
struct BraidWord {
  int strands = 1;
  std::vector<int> generators;

  /// (sigma_1 ... sigma_{p-1})^q, closing to T(p,q).
  static BraidWord torus(int p, int q);
};

/// True iff the closure has a single component.
bool closes_to_knot(const BraidWord& word);

struct SeifertMatrix {
  std::vector<std::vector<Integer>> entries;

  std::size_t size() const { return entries.size(); }
  std::size_t genus() const { return entries.size() / 2; }
};

/// Seifert matrix of the surface obtained by Seifert's algorithm on the closed
/// braid diagram. Throws ValidationError unless every column is used and the
/// closure is a knot.
SeifertMatrix seifert_from_braid(const BraidWord& word);

/// Exact determinant by fraction-free elimination.
Integer determinant(std::vector<std::vector<Integer>> m);

/// det(V - V^T); +-1 for a Seifert matrix of a knot.
Integer skew_determinant(const SeifertMatrix& v);

/// Signature of (1 - w)V + (1 - conj w)V^T at w = e^{2 pi i x}, by Hermitian
/// eigenvalues with a backward-error bound. Throws NumericalError if some
/// eigenvalue cannot be separated from zero (x at or near a root of Delta).
int numeric_signature(const SeifertMatrix& v, const Rational& x);

struct IndependenceCertificate {
  std::vector<std::pair<int, int>> generators;
  int k = 0;
  std::vector<Check> checks;

  bool valid() const { return all_passed(checks); }
};

/// Checks, for T(p_i, q_i) against the genus-k filtration level:
/// distinct_products; per pair coprime(p,q), degree_gap(p,q) (p, q > k and
/// 2k < phi(pq)) and primitive_jump(p,q). Failures are recorded, never thrown.
IndependenceCertificate torus_independence_certificate(const std::vector<std::pair<int, int>>& pairs, int k);

}  // namespace concord::signature
