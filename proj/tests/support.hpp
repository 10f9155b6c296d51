#pragma once

// Random generators shared by the property tests. Every generator takes the
// engine explicitly so each test case is reproducible from its seed.

#include <numeric>
#include <random>
#include <vector>

#include "concord/knots.hpp"
#include "concord/laurent.hpp"
#include "concord/numeric.hpp"

namespace testing_support {

using concord::Integer;
using concord::knots::KnotExpression;
using concord::laurent::LaurentPolynomial;

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long draw(std::mt19937_64& rng, long lo, long hi) { return concord::uniform_int(rng, lo, hi); }

/// Nonzero polynomial with degree <= max_degree and coefficients in [-bound, bound].
inline LaurentPolynomial random_polynomial(std::mt19937_64& rng, int max_degree, long bound, int max_shift = 0) {
  while (true) {
    int degree = static_cast<int>(draw(rng, 0, max_degree));
    std::vector<Integer> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(draw(rng, -bound, bound));
    auto f = LaurentPolynomial::from_coefficients(c, static_cast<int>(draw(rng, -max_shift, max_shift)));
    if (!f.is_zero()) return f;
  }
}

/// Polynomial with f(1) = 1, built by correcting the constant term.
inline LaurentPolynomial random_normalized(std::mt19937_64& rng, int max_degree, long bound) {
  while (true) {
    auto f = random_polynomial(rng, max_degree, bound);
    f += LaurentPolynomial(Integer(1) - f.value_at_one());
    if (!f.is_zero() && f.value_at_one() == 1) return f;
  }
}

inline std::pair<int, int> random_coprime_pair(std::mt19937_64& rng, int lo, int hi) {
  while (true) {
    int p = static_cast<int>(draw(rng, lo, hi));
    int q = static_cast<int>(draw(rng, lo, hi));
    if (p != q && std::gcd(p, q) == 1) return {p, q};
  }
}

/// Arbitrary expression over every constructor, depth-limited.
inline KnotExpression random_expression(std::mt19937_64& rng, int depth) {
  long choice = draw(rng, 0, depth <= 0 ? 1 : 5);
  switch (choice) {
    case 0:
      return KnotExpression::unknot();
    case 1: {
      auto [p, q] = random_coprime_pair(rng, 2, 7);
      return KnotExpression::torus(p, q);
    }
    case 2:
      return KnotExpression::whitehead_double(random_expression(rng, depth - 1));
    case 3: {
      while (true) {
        int p = static_cast<int>(draw(rng, 1, 4));
        int q = static_cast<int>(draw(rng, 1, 7));
        if (std::gcd(p, q) == 1) return KnotExpression::cable(random_expression(rng, depth - 1), p, q);
      }
    }
    case 4:
      return KnotExpression::mirror(random_expression(rng, depth - 1));
    default: {
      std::vector<KnotExpression> terms;
      long n = draw(rng, 2, 3);
      for (long i = 0; i < n; ++i) terms.push_back(random_expression(rng, depth - 1));
      return KnotExpression::sum(terms);
    }
  }
}

/// Expression whose signature jumps are supported: torus knots, Whitehead
/// doubles, cables of Whitehead doubles, mirrors and sums.
inline KnotExpression random_signature_expression(std::mt19937_64& rng, int depth) {
  long choice = draw(rng, 0, depth <= 0 ? 2 : 4);
  switch (choice) {
    case 0: {
      auto [p, q] = random_coprime_pair(rng, 2, 7);
      return KnotExpression::torus(p, q);
    }
    case 1:
      return KnotExpression::whitehead_double(KnotExpression::torus(2, 3));
    case 2: {
      int p = static_cast<int>(draw(rng, 2, 4));
      int q = p + 1;
      return KnotExpression::cable(KnotExpression::whitehead_double(KnotExpression::torus(2, 3)), p, q);
    }
    case 3:
      return KnotExpression::mirror(random_signature_expression(rng, depth - 1));
    default:
      return KnotExpression::sum({random_signature_expression(rng, depth - 1), random_signature_expression(rng, depth - 1)});
  }
}

}  // namespace testing_support
