#include "laurent/cyclotomic.hpp"

#include "concord/errors.hpp"
#include "concord/laurent.hpp"

namespace concord::laurent {

namespace detail {

std::vector<std::pair<long, int>> mobius_divisors(long n) {
  std::vector<long> primes;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes.push_back(m);
  std::vector<std::pair<long, int>> out;
  const std::size_t subsets = std::size_t{1} << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    long d = 1;
    int mu = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (std::size_t{1} << i)) {
        d *= primes[i];
        mu = -mu;
      }
    }
    out.emplace_back(d, mu);
  }
  return out;
}

namespace {

// p * (t^m - 1)
dense::Poly times_binomial(const dense::Poly& p, long m) {
  auto shift = static_cast<std::size_t>(m);
  dense::Poly r(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + shift] += p[i];
    r[i] -= p[i];
  }
  dense::trim(r);
  return r;
}

// p / (t^m - 1), exact by construction.
dense::Poly over_binomial(const dense::Poly& p, long m) {
  auto shift = static_cast<std::size_t>(m);
  dense::Poly q(p.size() - shift);
  // p = q t^m - q, so q_i = p_{i+m} + q_{i+m}, read from the top.
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = p[k + shift];
    if (k + shift < q.size()) q[k] += q[k + shift];
  }
  dense::trim(q);
  return q;
}

}  // namespace

dense::Poly cyclotomic_dense(long n) {
  if (n < 1) throw RangeError("cyclotomic index must be >= 1");
  dense::Poly p{Integer(1)};
  auto divisors = mobius_divisors(n);
  for (const auto& [d, mu] : divisors)
    if (mu == 1) p = times_binomial(p, n / d);
  for (const auto& [d, mu] : divisors)
    if (mu == -1) p = over_binomial(p, n / d);
  return p;
}

Integer cyclotomic_value(long n, const Integer& x) {
  Integer num = 1, den = 1, power;
  for (const auto& [d, mu] : mobius_divisors(n)) {
    mpz_pow_ui(power.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(n / d));
    if (mu == 1)
      num *= power - 1;
    else
      den *= power - 1;
  }
  if (den == 0) throw UndefinedError("cyclotomic value at a root of unity");
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

LaurentPolynomial cyclotomic(long n) {
  return LaurentPolynomial::from_coefficients(detail::cyclotomic_dense(n));
}

std::vector<long> cyclotomic_indices_up_to_degree(long max_degree) {
  std::vector<long> out;
  if (max_degree < 1) return out;
  // totient(d) >= sqrt(d / 2), so no d beyond 2 * max_degree^2 qualifies.
  const long limit = std::max(2L, 2 * max_degree * max_degree);
  std::vector<long> phi(static_cast<std::size_t>(limit + 1));
  for (long i = 0; i <= limit; ++i) phi[static_cast<std::size_t>(i)] = i;
  for (long p = 2; p <= limit; ++p) {
    if (phi[static_cast<std::size_t>(p)] != p) continue;
    for (long k = p; k <= limit; k += p) phi[static_cast<std::size_t>(k)] -= phi[static_cast<std::size_t>(k)] / p;
  }
  for (long d = 1; d <= limit; ++d)
    if (phi[static_cast<std::size_t>(d)] <= max_degree) out.push_back(d);
  return out;
}

std::optional<long> cyclotomic_index(const LaurentPolynomial& f) {
  if (f.is_zero()) return std::nullopt;
  auto g = f.normalized_shift();
  if (g.leading_coefficient() < 0) g = -g;
  if (g.leading_coefficient() != 1) return std::nullopt;
  const long degree = breadth(g);
  if (degree == 0) return std::nullopt;
  for (long d : cyclotomic_indices_up_to_degree(degree)) {
    if (totient(d) != degree) continue;
    if (cyclotomic(d) == g) return d;
  }
  return std::nullopt;
}

}  // namespace concord::laurent
