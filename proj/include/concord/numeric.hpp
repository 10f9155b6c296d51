#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace concord {

using Integer = mpz_class;
using Rational = mpq_class;

/// Rational from numerator/denominator, canonicalized.
Rational make_rational(long num, long den = 1);

/// Parses "a", "a/b" or "-a/b"; throws ValidationError on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Decimal rendering, for presentation only.
double to_double(const Rational& value);

/// Count of 1 <= k <= n coprime to n.
long totient(long n);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

/// Deterministic, platform-independent draw in [lo, hi].
template <typename Rng>
long uniform_int(Rng& rng, long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

}  // namespace concord
