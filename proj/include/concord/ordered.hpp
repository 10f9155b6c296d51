#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "concord/certificate.hpp"
#include "concord/knots.hpp"
#include "concord/numeric.hpp"

namespace concord::ordered {

using concord::to_string;

/// Element of the lexicographically ordered group of finitely supported
/// integer sequences; the lowest differing index decides the order.
class LexElement {
 public:
  LexElement() = default;
  explicit LexElement(std::vector<Integer> coordinates);
  LexElement(std::initializer_list<long> coordinates);

  static LexElement unit(std::size_t index, long coefficient = 1);

  /// Coordinates without trailing zeros.
  const std::vector<Integer>& coordinates() const { return coords_; }
  Integer operator[](std::size_t index) const;
  bool is_zero() const { return coords_.empty(); }

  /// Throw UndefinedError on zero.
  std::size_t leading_index() const;
  const Integer& leading_coefficient() const;

  int sign() const;
  LexElement abs() const { return sign() < 0 ? -*this : *this; }
  /// Coordinates with index < length.
  LexElement truncated(std::size_t length) const;

  LexElement operator-() const;
  LexElement& operator+=(const LexElement& other);
  LexElement& operator-=(const LexElement& other) { return *this += -other; }
  friend LexElement operator+(LexElement a, const LexElement& b) { return a += b; }
  friend LexElement operator-(LexElement a, const LexElement& b) { return a -= b; }
  friend LexElement operator*(const Integer& k, const LexElement& a);

  friend bool operator==(const LexElement& a, const LexElement& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const LexElement& a, const LexElement& b);

  /// "(1,-4,2)"; "0" for zero.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coords_;
};

std::strong_ordering lex_compare(const LexElement& a, const LexElement& b);
std::string to_string(std::strong_ordering order);  // "<", "=", ">"

enum class Relation { much_less, much_greater, equivalent, unknown };

std::string to_string(Relation relation);

/// relation describes |first| against |second|.
struct DominationVerdict {
  Relation relation = Relation::unknown;
  std::string rule_used;
};

/// Equivalent iff the leading indices agree; otherwise the later leading
/// index is dominated. Throws UndefinedError on zero input.
DominationVerdict archimedean(const LexElement& a, const LexElement& b);

/// a in G_x = { a : |a| << x }. Requires x > 0 (ValidationError).
bool subgroup_membership(const LexElement& a, const LexElement& x);

/// Order of G/G_x: '=' iff b - a is in G_x, otherwise the sign of b - a,
/// reported as the comparison of a with b. Requires x > 0.
std::strong_ordering quotient_compare(const LexElement& a, const LexElement& b, const LexElement& x);

/// Canonical representative of a + G_x: the coordinates up to the leading index of x.
LexElement quotient_image(const LexElement& a, const LexElement& x);

/// b = k a + c with |c| << a (or c = 0), when such k exists.
struct Decomposition {
  Integer k;
  LexElement c;
};
std::optional<Decomposition> decompose(const LexElement& b, const LexElement& a);

struct PropertyAResult {
  bool holds = false;
  std::optional<LexElement> counterexample;  // some b ~ a with no decomposition
  int confirmations = 0;                      // sampled b that decomposed
  int samples = 0;
};

/// Holds iff the leading coefficient of a is +-1; confirmed by decomposing
/// `samples` random b in the Archimedean class of a. Throws UndefinedError on zero.
PropertyAResult property_A_check(const LexElement& a, std::mt19937_64& rng, int samples = 500);

struct ChainVerdict {
  bool chain_ok = false;
  std::string chain_witness;
  int trials_run = 0;
  bool combinations_ok = false;
  std::optional<std::vector<long>> vanishing_combination;

  /// "verified", "failed_precondition" or "dependent".
  std::string status() const;
};

/// Elements listed so that 0 < e_0 << e_1 << ...; checks the chain pairwise,
/// then that `trials` random nonzero integer combinations do not vanish.
/// Throws ValidationError on an empty list.
ChainVerdict chain_independence(const std::vector<LexElement>& elements, int trials, std::mt19937_64& rng);

/// Published boolean datum with its origin. A missing provenance makes the
/// flag unusable in certificates.
struct TaggedFlag {
  bool value = false;
  std::optional<Provenance> provenance;
};

/// Record of an epsilon-equivalence class: sign, the first two a+ entries, and
/// published flags.
struct EpsilonClass {
  std::string label;
  int epsilon_sign = 0;
  std::optional<long> a1;
  std::optional<long> a2;
  std::optional<TaggedFlag> property_A;
  std::optional<TaggedFlag> dominated_by_next;
  std::optional<long> genus_bound;
  std::optional<long> tau_bound;
  Provenance provenance;

  /// Invariant violations, empty when the record is well formed.
  std::vector<std::string> problems() const;
};

/// much_less if a1(K) > a1(K'); much_greater if a1 equal and a2(K) > a2(K');
/// mirrored cases accordingly; unknown otherwise. Throws InsufficientData unless
/// both records have epsilon_sign = +1 and a1.
DominationVerdict compare_aplus(const EpsilonClass& k, const EpsilonClass& k_prime);

/// 2n - 1: largest a2 of a genus <= n knot with a1 = 1. Requires n >= 1.
long a2_upper_bound(long n);

enum class EpsilonVerdict { obstructs, inconclusive };

std::string to_string(EpsilonVerdict verdict);

struct EpsilonObstruction {
  EpsilonVerdict verdict = EpsilonVerdict::inconclusive;
  std::string reason;
};

/// Obstructs iff a2(J) >= 2n, in which case |[K]| << [J] for every K in G_n.
/// RuleNotApplicable if a1 != 1; InsufficientData if a1 or a2 is missing.
EpsilonObstruction epsilon_obstruction(const EpsilonClass& j, long n);

/// Published epsilon-class records, keyed by label ("J_5", "L_3").
class Registry {
 public:
  /// Built-in records for J_n and L_n, 2 <= n <= 64.
  static Registry defaults();
  /// Throws ValidationError on malformed JSON; record problems are kept for certificates to report.
  static Registry parse(std::string_view json_text);
  static Registry load(const std::string& path);

  void add(EpsilonClass record);
  const std::vector<EpsilonClass>& records() const { return records_; }
  const EpsilonClass* find(std::string_view label) const;
  std::string to_json() const;

 private:
  std::vector<EpsilonClass> records_;
};

std::string family_label(knots::Family family, int n);

struct EpsilonCertificate {
  knots::Family family = knots::Family::J;
  int k = 0;
  int first_index = 0;
  int max_index = 0;
  long obstruction_level = 0;  // n such that G_n is obstructed
  std::vector<EpsilonClass> records;
  std::vector<Check> checks;
  std::vector<Provenance> provenance;

  bool valid() const { return all_passed(checks); }
};

/// Family J: members k..N against G_{floor(k/2)}, requiring Property A and the
/// domination chain (summand). Family L: members 2k..N against G_k, requiring
/// the chain only (independence). RangeError on bad bounds; failed
/// hypotheses are recorded as checks.
EpsilonCertificate summand_certificate_epsilon(int k, int max_index, const Registry& registry,
                                               knots::Family family = knots::Family::J,
                                               std::uint64_t seed = 20240101);

/// Randomized checks of the quotient construction in the lex model.
struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
};

std::vector<SuiteResult> quotient_property_suite(std::size_t rank, int cases, std::mt19937_64& rng);

}  // namespace concord::ordered
