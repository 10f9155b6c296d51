#include <algorithm>
#include <cctype>
#include <sstream>

#include "concord/errors.hpp"
#include "concord/laurent.hpp"
#include "laurent/dense.hpp"

namespace concord::laurent {

namespace {

void erase_zero(LaurentPolynomial::Terms& terms, int exponent) {
  auto it = terms.find(exponent);
  if (it != terms.end() && it->second == 0) terms.erase(it);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPolynomial::LaurentPolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPolynomial::LaurentPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

LaurentPolynomial LaurentPolynomial::monomial(const Integer& coefficient, int exponent) {
  Terms t;
  if (coefficient != 0) t.emplace(exponent, coefficient);
  return LaurentPolynomial(std::move(t));
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::vector<Integer>& coefficients,
                                                       int lowest_exponent) {
  Terms t;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) t.emplace(lowest_exponent + static_cast<int>(i), coefficients[i]);
  return LaurentPolynomial(std::move(t));
}

LaurentPolynomial LaurentPolynomial::from_coefficients(std::initializer_list<long> coefficients,
                                                       int lowest_exponent) {
  std::vector<Integer> c;
  for (long x : coefficients) c.emplace_back(x);
  return from_coefficients(c, lowest_exponent);
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPolynomial::min_exponent() const {
  if (is_zero()) throw UndefinedError("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (is_zero()) throw UndefinedError("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

const Integer& LaurentPolynomial::leading_coefficient() const {
  if (is_zero()) throw UndefinedError("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

const Integer& LaurentPolynomial::trailing_coefficient() const {
  if (is_zero()) throw UndefinedError("zero polynomial has no trailing coefficient");
  return terms_.begin()->second;
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Integer LaurentPolynomial::value_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Integer LaurentPolynomial::value_at_minus_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0)
      sum += c;
    else
      sum -= c;
  }
  return sum;
}

std::vector<Integer> LaurentPolynomial::dense() const {
  if (is_zero()) return {};
  std::vector<Integer> out(static_cast<std::size_t>(max_exponent() - min_exponent() + 1));
  int lo = min_exponent();
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace_hint(t.end(), e + k, c);
  LaurentPolynomial r;
  r.terms_ = std::move(t);
  return r;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int p) const {
  if (p == 0) return LaurentPolynomial(value_at_one());
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * p, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::normalized_shift() const {
  if (is_zero()) return *this;
  return shifted(-min_exponent());
}

LaurentPolynomial LaurentPolynomial::centered() const {
  if (is_zero()) return *this;
  int sum = min_exponent() + max_exponent();
  if (sum % 2 != 0) throw ValidationError("odd breadth: polynomial cannot be centered");
  return shifted(-sum / 2);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    terms_[e] += c;
    erase_zero(terms_, e);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) {
    terms_[e] -= c;
    erase_zero(terms_, e);
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    terms_.clear();
    return *this;
  }
  auto product = dense::mul(dense(), other.dense());
  *this = from_coefficients(product, min_exponent() + other.min_exponent());
  return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result(1L);
  LaurentPolynomial base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str() << "*t^" << e;
  }
  return out.str();
}

std::string LaurentPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  LaurentPolynomial parse() {
    if (text_.empty()) fail("empty polynomial");
    LaurentPolynomial result;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (!first) {
        if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      }
      // Accept runs such as "+ -1*t^0" from the canonical form.
      while (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -sign;
        ++pos_;
      }
      result += term(sign);
      first = false;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse polynomial '" + text_ + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(text_[pos_++]);
    return d;
  }

  LaurentPolynomial term(int sign) {
    Integer coefficient = 1;
    std::string d = digits();
    bool have_coefficient = !d.empty();
    if (have_coefficient) coefficient = Integer(d);
    if (peek() == '*') {
      if (!have_coefficient) fail("dangling '*'");
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    int exponent = 0;
    if (peek() == 't') {
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        bool paren = peek() == '(';
        if (paren) ++pos_;
        int esign = 1;
        if (peek() == '-' || peek() == '+') esign = text_[pos_++] == '-' ? -1 : 1;
        std::string e = digits();
        if (e.empty()) fail("missing exponent");
        if (paren) {
          if (peek() != ')') fail("expected ')'");
          ++pos_;
        }
        exponent = esign * std::stoi(e);
      }
    } else if (!have_coefficient) {
      fail("expected a coefficient or 't'");
    }
    return LaurentPolynomial::monomial(sign * coefficient, exponent);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial LaurentPolynomial::parse(std::string_view text) {
  return PolynomialParser(text).parse();
}

LaurentPolynomial arithmetic(const LaurentPolynomial& f, const LaurentPolynomial& g, ArithmeticOp op) {
  switch (op) {
    case ArithmeticOp::add:
      return f + g;
    case ArithmeticOp::subtract:
      return f - g;
    case ArithmeticOp::multiply:
      return f * g;
  }
  return f;
}

int breadth(const LaurentPolynomial& f) {
  if (f.is_zero()) throw UndefinedError("breadth of the zero polynomial is undefined");
  return f.max_exponent() - f.min_exponent();
}

std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g) {
  if (g.is_zero()) throw UndefinedError("division by the zero polynomial");
  if (f.is_zero()) return LaurentPolynomial{};
  auto q = dense::divide_exact(f.dense(), g.dense());
  if (!q) return std::nullopt;
  return LaurentPolynomial::from_coefficients(*q, f.min_exponent() - g.min_exponent());
}

bool is_self_reciprocal(const LaurentPolynomial& f) {
  if (f.is_zero()) return true;
  auto a = f.normalized_shift();
  auto b = f.reciprocal().normalized_shift();
  return a == b || a == -b;
}

}  // namespace concord::laurent
