// Factorization over Z by the Berlekamp-Zassenhaus scheme: factor modulo a
// small prime (distinct-degree, then Cantor-Zassenhaus equal-degree
// splitting), Hensel-lift to a modulus beyond the Mignotte bound, and
// recombine subsets of the lifted factors by trial division.

#include "laurent/zassenhaus.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace concord::laurent::detail {

namespace {

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

class Field {
 public:
  explicit Field(u64 p) : p_(p) {}

  u64 prime() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  ModPoly reduce(const dense::Poly& f) const {
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p_);
    trim(r);
    return r;
  }

  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
    }
    trim(r);
    return r;
  }

  ModPoly scale(const ModPoly& a, u64 c) const {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c);
    trim(r);
    return r;
  }

  ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  /// (quotient, remainder) of a by a nonzero b.
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(a);
    trim(r);
    if (r.size() < b.size()) return {ModPoly{}, r};
    ModPoly q(r.size() - b.size() + 1, 0);
    const u64 lead_inv = inv(b.back());
    for (std::size_t shift = q.size(); shift-- > 0;) {
      u64 c = mul(r[shift + b.size() - 1], lead_inv);
      if (c == 0) continue;
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, b[j]));
    }
    trim(q);
    trim(r);
    return {q, r};
  }

  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }

  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// s, t with s*a + t*b = 1, for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b;
    ModPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    // r0 is a nonzero constant.
    u64 c = inv(r0[0]);
    return {scale(s0, c), scale(t0, c)};
  }

  ModPoly derivative(const ModPoly& a) const {
    if (a.size() <= 1) return {};
    ModPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p_);
    trim(r);
    return r;
  }

  ModPoly powmod(const ModPoly& base, const Integer& exponent, const ModPoly& modulus) const {
    ModPoly result{1};
    ModPoly b = rem(base, modulus);
    const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      result = rem(mul(result, result), modulus);
      if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
    }
    return result;
  }

 private:
  u64 p_;
};

std::vector<u64> small_primes(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 3; n <= limit; n += 2) {
    bool prime = true;
    for (u64 d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Equal-degree splitting of a monic product of irreducibles of degree d.
void split_equal_degree(const Field& F, const ModPoly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
  const std::size_t n = g.size() - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  Integer exponent;
  mpz_ui_pow_ui(exponent.get_mpz_t(), F.prime(), d);
  exponent = (exponent - 1) / 2;
  for (;;) {
    ModPoly a(n);
    for (auto& c : a) c = rng() % F.prime();
    Field::trim(a);
    if (a.size() < 2) continue;
    ModPoly b = F.sub(F.powmod(a, exponent, g), ModPoly{1});
    ModPoly h = F.gcd(g, b);
    if (h.size() > 1 && h.size() < g.size()) {
      split_equal_degree(F, h, d, rng, out);
      split_equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic square-free polynomial mod p.
std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& f) {
  std::vector<ModPoly> out;
  std::mt19937_64 rng(0x5eed0000ULL + F.prime());
  ModPoly rest = f;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer p(static_cast<unsigned long>(F.prime()));
  for (std::size_t d = 1; 2 * d <= rest.size() - 1; ++d) {
    h = F.powmod(h, p, rest);
    ModPoly g = F.gcd(rest, F.sub(h, x));
    if (g.size() > 1) {
      split_equal_degree(F, g, d, rng, out);
      rest = F.divmod(rest, g).first;
      h = F.rem(h, rest);
    }
  }
  if (rest.size() > 1) out.push_back(F.monic(rest));
  return out;
}

dense::Poly to_integer(const ModPoly& a) {
  dense::Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

dense::Poly mod_coefficients(const dense::Poly& a, const Integer& m) {
  dense::Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  dense::trim(r);
  return r;
}

dense::Poly symmetric(const dense::Poly& a, const Integer& m) {
  dense::Poly r = mod_coefficients(a, m);
  Integer half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  dense::trim(r);
  return r;
}

// Lifts F = g0 * h0 (mod p), F monic modulo p^k, with g0 and h0 monic, to
// monic g, h with F = g * h (mod p^k).
std::pair<dense::Poly, dense::Poly> hensel_lift(const Field& Fp, const dense::Poly& F, const ModPoly& g0,
                                                const ModPoly& h0, unsigned k) {
  auto [s, t] = Fp.bezout(g0, h0);
  dense::Poly g = to_integer(g0), h = to_integer(h0);
  const Integer p(static_cast<unsigned long>(Fp.prime()));
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * p;
    dense::Poly err = mod_coefficients(dense::sub(F, dense::mul(g, h)), next);
    for (auto& c : err) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
    ModPoly e = Fp.reduce(err);
    auto [quot, a] = Fp.divmod(Fp.mul(e, t), g0);
    ModPoly b = Fp.add(Fp.mul(e, s), Fp.mul(quot, h0));
    g = mod_coefficients(dense::add(g, dense::scale(to_integer(a), pj)), next);
    h = mod_coefficients(dense::add(h, dense::scale(to_integer(b), pj)), next);
    pj = next;
  }
  return {g, h};
}

// Coefficient bound for any factor of f, times |lc(f)|, doubled.
Integer lifting_target(const dense::Poly& f) {
  Integer sum_sq = 0;
  for (const auto& c : f) sum_sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sum_sq.get_mpz_t());
  norm += 1;
  Integer bound = norm * abs(dense::lead(f)) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(dense::degree(f)));
  return bound;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<dense::Poly> factor_square_free(const dense::Poly& f) {
  if (dense::degree(f) <= 1) return {f};

  // Pick the prime, among the first few admissible ones, with fewest modular factors.
  const Integer& lc = dense::lead(f);
  std::vector<ModPoly> best_factors;
  u64 best_prime = 0;
  int admissible = 0;
  for (u64 p : small_primes(2000)) {
    if (mpz_fdiv_ui(lc.get_mpz_t(), p) == 0) continue;
    Field F(p);
    ModPoly fp = F.monic(F.reduce(f));
    if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
    auto factors = factor_mod_p(F, fp);
    if (best_prime == 0 || factors.size() < best_factors.size()) {
      best_factors = std::move(factors);
      best_prime = p;
    }
    if (best_factors.size() == 1 || ++admissible == 5) break;
  }
  if (best_factors.size() <= 1) return {f};

  const Field F(best_prime);
  const Integer p(static_cast<unsigned long>(best_prime));
  const Integer target = lifting_target(f);
  unsigned k = 1;
  Integer modulus = p;
  while (modulus <= target) {
    modulus *= p;
    ++k;
  }

  Integer lc_inv;
  mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
  dense::Poly monic_f = mod_coefficients(dense::scale(f, lc_inv), modulus);

  std::vector<dense::Poly> lifted;
  dense::Poly remaining = monic_f;
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) rest = F.mul(rest, best_factors[j]);
    auto [g, h] = hensel_lift(F, remaining, best_factors[i], rest, k);
    lifted.push_back(std::move(g));
    remaining = std::move(h);
  }
  lifted.push_back(std::move(remaining));

  std::vector<dense::Poly> result;
  dense::Poly current = f;
  std::size_t subset = 1;
  while (2 * subset <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(subset);
    for (std::size_t i = 0; i < subset; ++i) idx[i] = i;
    do {
      dense::Poly candidate{dense::lead(current)};
      for (std::size_t i : idx) candidate = mod_coefficients(dense::mul(candidate, lifted[i]), modulus);
      candidate = dense::primitive_part(symmetric(candidate, modulus));
      if (candidate.empty() || dense::degree(candidate) < 1) continue;
      if (current[0] != 0 && !mpz_divisible_p(current[0].get_mpz_t(), candidate[0].get_mpz_t())) continue;
      auto quotient = dense::divide_exact(current, candidate);
      if (!quotient) continue;
      result.push_back(candidate);
      current = std::move(*quotient);
      for (std::size_t i = idx.size(); i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
      found = true;
      break;
    } while (next_combination(idx, lifted.size()));
    if (!found) ++subset;
  }
  if (dense::degree(current) >= 1) result.push_back(dense::primitive_part(current));
  return result;
}

}  // namespace concord::laurent::detail
