#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "concord/numeric.hpp"

namespace concord::laurent {

/// Integer Laurent polynomial in one variable t, stored sparsely as
/// exponent -> nonzero coefficient. Value type; immutable through its API.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long constant);  // NOLINT: integers embed as constants
  explicit LaurentPolynomial(const Integer& constant);
  explicit LaurentPolynomial(Terms terms);

  static LaurentPolynomial monomial(const Integer& coefficient, int exponent);
  /// coefficients[i] multiplies t^(lowest_exponent + i).
  static LaurentPolynomial from_coefficients(const std::vector<Integer>& coefficients,
                                             int lowest_exponent = 0);
  static LaurentPolynomial from_coefficients(std::initializer_list<long> coefficients,
                                             int lowest_exponent = 0);

  /// Accepts the canonical `c*t^e + ...` form and looser variants such as
  /// `t - 1 + t^-1`, `2t^2`, `-3`. Throws ValidationError.
  static LaurentPolynomial parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Throw UndefinedError on the zero polynomial.
  int min_exponent() const;
  int max_exponent() const;
  const Integer& leading_coefficient() const;
  const Integer& trailing_coefficient() const;

  Integer coefficient(int exponent) const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const;
  Integer value_at_one() const;
  Integer value_at_minus_one() const;

  /// Dense coefficients from min_exponent() upward.
  std::vector<Integer> dense() const;

  LaurentPolynomial shifted(int k) const;  // t^k * f
  LaurentPolynomial reciprocal() const;    // f(t^-1)
  LaurentPolynomial substitute_power(int p) const;  // f(t^p)
  /// Shifted so that the lowest exponent is 0.
  LaurentPolynomial normalized_shift() const;
  /// Shifted so that the exponents are symmetric about 0; requires even breadth.
  LaurentPolynomial centered() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a.terms_ == b.terms_; }

  LaurentPolynomial pow(unsigned exponent) const;

  /// Canonical text: `c0*t^e0 + c1*t^e1 + ...`, exponents increasing; "0" for zero.
  std::string to_string() const;
  /// Human form such as `t^-1 - 1 + t`.
  std::string pretty() const;

 private:
  Terms terms_;
};

enum class ArithmeticOp { add, subtract, multiply };

LaurentPolynomial arithmetic(const LaurentPolynomial& f, const LaurentPolynomial& g, ArithmeticOp op);

/// Max exponent minus min exponent. Throws UndefinedError for the zero polynomial.
int breadth(const LaurentPolynomial& f);

/// Exact quotient f / g in Z[t, t^-1], if it exists.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// True iff f = +-t^k f(t^-1) for some k.
bool is_self_reciprocal(const LaurentPolynomial& f);

/// n-th cyclotomic polynomial (n >= 1), as an ordinary polynomial in t.
LaurentPolynomial cyclotomic(long n);

/// If f is +-t^k * Phi_d for some d, returns d.
std::optional<long> cyclotomic_index(const LaurentPolynomial& f);

/// Every d >= 1 with totient(d) <= max_degree, ascending.
std::vector<long> cyclotomic_indices_up_to_degree(long max_degree);

}  // namespace concord::laurent
