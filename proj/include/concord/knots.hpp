#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concord/certificate.hpp"
#include "concord/laurent.hpp"
#include "concord/numeric.hpp"

namespace concord::knots {

using laurent::LaurentPolynomial;

/// Immutable knot expression: torus knots, cables, untwisted positive-clasped
/// Whitehead doubles, mirrors and connected sums.
///
/// Constructors normalize: sums are flattened, unknot summands dropped and
/// terms sorted by their canonical text; mirrors distribute over sums and
/// cancel in pairs; T(p,q) is stored with p < q; the (1,q)-cable of K is K and
/// cables of the unknot are torus knots. Two expressions are equal iff their
/// canonical text agrees.
class KnotExpression {
 public:
  enum class Kind { unknot, torus, cable, whitehead, mirror, sum };

  static KnotExpression unknot();
  /// Requires p, q >= 2 and gcd(p, q) = 1.
  static KnotExpression torus(int p, int q);
  /// (p, q)-cable: p longitudinal strands, q meridional winding. Requires
  /// p >= 1, q >= 0 and gcd(p, q) = 1; negative q is rejected.
  static KnotExpression cable(const KnotExpression& companion, int p, int q);
  static KnotExpression whitehead_double(const KnotExpression& companion);
  static KnotExpression mirror(const KnotExpression& knot);
  static KnotExpression sum(const std::vector<KnotExpression>& terms);

  /// Grammar: `U`, `T(p,q)`, `Wh(E)`, `Cable(E;p,q)`, `-E`, `E # E`, `(E)`.
  static KnotExpression parse(std::string_view text);

  Kind kind() const;
  int p() const;  // torus and cable parameters
  int q() const;
  /// Companion of a cable or Whitehead double, or the operand of a mirror.
  const KnotExpression& inner() const;
  const std::vector<KnotExpression>& terms() const;  // sum only

  const std::string& to_string() const;

  friend bool operator==(const KnotExpression& a, const KnotExpression& b) {
    return a.to_string() == b.to_string();
  }
  friend bool operator<(const KnotExpression& a, const KnotExpression& b) {
    return a.to_string() < b.to_string();
  }

  friend KnotExpression operator-(const KnotExpression& k) { return mirror(k); }
  friend KnotExpression operator+(const KnotExpression& a, const KnotExpression& b) { return sum({a, b}); }

 private:
  struct Node;
  explicit KnotExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Delta of T(p, q) by exact division of (t^pq - 1)(t - 1) by (t^p - 1)(t^q - 1),
/// centered so that it is symmetric under t -> t^-1.
LaurentPolynomial torus_alexander(int p, int q);

/// Normalized, centered Alexander polynomial.
LaurentPolynomial alexander(const KnotExpression& knot);

struct SliceGenusHint {
  int value = 0;
  Provenance provenance;
};

struct GenusReport {
  int seifert_genus = 0;
  int summand_max_genus = 0;  // max Seifert genus over top-level summands
  std::optional<SliceGenusHint> slice_genus_hint;
};

GenusReport genus(const KnotExpression& knot);

enum class Family { J, Jprime, L };

std::string to_string(Family family);
Family parse_family(std::string_view name);

/// A named member of one of the three families, with any published annotations.
struct FamilyMember {
  Family family;
  int n = 0;
  std::string label;
  KnotExpression knot;
  std::optional<SliceGenusHint> slice_genus_hint;
};

/// J_n = Cable(Wh(T(2,3)); n, n+1) # -T(n, n+1)
/// J'_n = Cable(Wh(T(2,3)); n, 2n-1) # -T(n, 2n-1)
/// L_n = Cable(Wh(T(2,3)); n, 1) # -Cable(Wh(T(2,3)); n-1, 1), published slice genus 1.
/// Requires n >= 2.
FamilyMember family(Family name, int n);

GenusReport genus(const FamilyMember& member);

struct SplittingGenusRange {
  Rational lower;
  Rational upper;
};

/// lower from the odd-multiplicity factors of the Alexander polynomial,
/// upper = largest summand genus.
SplittingGenusRange gsp_bound_of_knot(const KnotExpression& knot);

}  // namespace concord::knots
