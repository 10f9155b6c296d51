#include "concord/factor.hpp"

#include <algorithm>

#include "concord/errors.hpp"
#include "laurent/cyclotomic.hpp"
#include "laurent/dense.hpp"
#include "laurent/zassenhaus.hpp"

namespace concord::laurent {

namespace {

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  std::vector<std::pair<Integer, int>> out;
  for (unsigned long p = 2; p <= 1000000UL && Integer(p) * p <= n; ++p) {
    int m = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++m;
    }
    if (m > 0) out.emplace_back(Integer(p), m);
  }
  // Whatever survives trial division is kept whole.
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

LaurentPolynomial canonical_associate(const LaurentPolynomial& p) {
  if (p.is_zero()) throw UndefinedError("zero polynomial has no canonical associate");
  LaurentPolynomial q = p.normalized_shift();
  return q.leading_coefficient() < 0 ? -q : q;
}

LaurentPolynomial canonical_reciprocal(const LaurentPolynomial& p) {
  return canonical_associate(p.reciprocal());
}

bool canonical_less(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const int ba = breadth(a), bb = breadth(b);
  if (ba != bb) return ba < bb;
  auto da = a.dense(), db = b.dense();
  return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
}

LaurentPolynomial Factorization::expand() const {
  LaurentPolynomial result = LaurentPolynomial::monomial(Integer(sign), shift);
  for (const auto& f : factors) result *= f.polynomial.pow(static_cast<unsigned>(f.multiplicity));
  return result;
}

int Factorization::multiplicity_of(const LaurentPolynomial& p) const {
  LaurentPolynomial key = canonical_associate(p);
  for (const auto& f : factors)
    if (f.polynomial == key) return f.multiplicity;
  return 0;
}

Factorization factor(const LaurentPolynomial& f, const FactorOptions& options) {
  if (f.is_zero()) throw UndefinedError("cannot factor the zero polynomial");
  Factorization out;
  out.shift = f.min_exponent();
  dense::Poly g = f.normalized_shift().dense();
  if (dense::lead(g) < 0) {
    out.sign = -1;
    g = dense::scale(g, Integer(-1));
  }
  const Integer content = dense::content(g);
  g = dense::primitive_part(g);
  for (auto& [prime, m] : factor_integer(content))
    out.factors.push_back(Factor{LaurentPolynomial(prime), m, std::nullopt});

  std::vector<long> indices = cyclotomic_indices_up_to_degree(dense::degree(g));
  if (options.cyclotomic_bound)
    std::erase_if(indices, [&](long d) { return d > *options.cyclotomic_bound; });
  Integer at2 = dense::evaluate(g, 2), at3 = dense::evaluate(g, 3);
  for (long d : indices) {
    if (dense::degree(g) < 1) break;
    if (totient(d) > dense::degree(g)) continue;
    Integer phi2 = detail::cyclotomic_value(d, 2), phi3 = detail::cyclotomic_value(d, 3);
    if (!mpz_divisible_p(at2.get_mpz_t(), phi2.get_mpz_t()) ||
        !mpz_divisible_p(at3.get_mpz_t(), phi3.get_mpz_t()))
      continue;
    dense::Poly phi = detail::cyclotomic_dense(d);
    int m = 0;
    while (auto q = dense::divide_exact(g, phi)) {
      g = std::move(*q);
      ++m;
    }
    if (m == 0) continue;
    out.factors.push_back(Factor{LaurentPolynomial::from_coefficients(phi), m, d});
    at2 = dense::evaluate(g, 2);
    at3 = dense::evaluate(g, 3);
  }

  if (dense::degree(g) >= 1) {
    for (const auto& [part, m] : dense::square_free_decomposition(g)) {
      for (const auto& irreducible : detail::factor_square_free(part)) {
        auto poly = LaurentPolynomial::from_coefficients(irreducible);
        out.factors.push_back(Factor{poly, m, cyclotomic_index(poly)});
      }
    }
  }

  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.polynomial, b.polynomial); });
  return out;
}

}  // namespace concord::laurent
