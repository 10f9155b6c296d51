#pragma once

#include <optional>
#include <vector>

#include "concord/laurent.hpp"

namespace concord::laurent {

/// An irreducible factor in canonical form: primitive (or a prime constant),
/// positive leading coefficient, lowest exponent 0.
struct Factor {
  LaurentPolynomial polynomial;
  int multiplicity = 1;
  std::optional<long> cyclotomic_index;  // d when the factor is Phi_d
};

/// f = sign * t^shift * prod(factor^multiplicity).
struct Factorization {
  int sign = 1;
  int shift = 0;
  std::vector<Factor> factors;

  LaurentPolynomial expand() const;
  /// Multiplicity of p (any unit multiple), 0 if absent.
  int multiplicity_of(const LaurentPolynomial& p) const;
};

struct FactorOptions {
  /// Largest d tried when stripping cyclotomic factors. Unset: every d whose
  /// Phi_d could still divide the input.
  std::optional<long> cyclotomic_bound;
};

/// Complete irreducible factorization over Z up to units +-t^k. Factors are
/// ordered by breadth, then by coefficients from the lowest exponent up.
Factorization factor(const LaurentPolynomial& f, const FactorOptions& options = {});

/// Canonical form of a nonzero polynomial modulo units +-t^k.
LaurentPolynomial canonical_associate(const LaurentPolynomial& p);

/// Canonical form of t^deg(p) * p(t^-1).
LaurentPolynomial canonical_reciprocal(const LaurentPolynomial& p);

/// Strict weak order used for the deterministic factor ordering.
bool canonical_less(const LaurentPolynomial& a, const LaurentPolynomial& b);

struct FoxMilnorResult {
  bool passes = false;
  /// On pass: f with f(t) f(t^-1) = +-t^n * input.
  std::optional<LaurentPolynomial> witness;
  /// On failure: the factors that break the pairing.
  std::vector<Factor> unpaired;
  Factorization factorization;
};

/// Decides whether f factors as +-t^n g(t) g(t^-1). Requires f(1) = +-1,
/// otherwise throws NormalizationRequired.
FoxMilnorResult fox_milnor(const LaurentPolynomial& f);

struct SplittingGenusBound {
  Rational bound;
  /// The odd-multiplicity factor of largest breadth, if any.
  std::optional<Factor> witness;
};

/// max over self-reciprocal irreducible factors of odd multiplicity of
/// breadth / 2, or 0.
/// Requires f(1) = +-1.
SplittingGenusBound gsp_lower_bound(const LaurentPolynomial& f);

}  // namespace concord::laurent
