#pragma once

// Dense integer polynomials (ascending coefficients, no trailing zeros; the
// empty vector is zero). Internal to the factorization code.

#include <optional>
#include <utility>
#include <vector>

#include "concord/numeric.hpp"

namespace concord::laurent::dense {

using Poly = std::vector<Integer>;

void trim(Poly& p);
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }
inline const Integer& lead(const Poly& p) { return p.back(); }

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Integer& c);
Poly derivative(const Poly& p);

Integer content(const Poly& p);
/// p / content(p) with a positive leading coefficient.
Poly primitive_part(const Poly& p);

std::optional<Poly> divide_exact(const Poly& a, const Poly& b);
Poly pseudo_remainder(const Poly& a, const Poly& b);
/// Primitive gcd with positive leading coefficient.
Poly gcd(const Poly& a, const Poly& b);

Integer evaluate(const Poly& p, const Integer& x);

/// Yun's decomposition of a primitive polynomial with positive leading
/// coefficient: pairs (square-free part, multiplicity), parts of degree >= 1.
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& f);

}  // namespace concord::laurent::dense
