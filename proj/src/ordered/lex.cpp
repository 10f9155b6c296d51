#include <sstream>

#include "concord/errors.hpp"
#include "concord/ordered.hpp"

namespace concord::ordered {

LexElement::LexElement(std::vector<Integer> coordinates) : coords_(std::move(coordinates)) { trim(); }

LexElement::LexElement(std::initializer_list<long> coordinates) {
  for (long c : coordinates) coords_.emplace_back(c);
  trim();
}

LexElement LexElement::unit(std::size_t index, long coefficient) {
  std::vector<Integer> c(index + 1, 0);
  c[index] = coefficient;
  return LexElement(std::move(c));
}

void LexElement::trim() {
  while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

Integer LexElement::operator[](std::size_t index) const { return index < coords_.size() ? coords_[index] : Integer(0); }

std::size_t LexElement::leading_index() const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] != 0) return i;
  throw UndefinedError("zero element has no leading index");
}

const Integer& LexElement::leading_coefficient() const { return coords_[leading_index()]; }

int LexElement::sign() const { return is_zero() ? 0 : sgn(leading_coefficient()); }

LexElement LexElement::truncated(std::size_t length) const {
  if (length >= coords_.size()) return *this;
  return LexElement(std::vector<Integer>(coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(length)));
}

LexElement LexElement::operator-() const {
  LexElement r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

LexElement& LexElement::operator+=(const LexElement& other) {
  if (other.coords_.size() > coords_.size()) coords_.resize(other.coords_.size(), 0);
  for (std::size_t i = 0; i < other.coords_.size(); ++i) coords_[i] += other.coords_[i];
  trim();
  return *this;
}

LexElement operator*(const Integer& k, const LexElement& a) {
  if (k == 0) return {};
  LexElement r(a);
  for (auto& c : r.coords_) c *= k;
  return r;
}

std::strong_ordering operator<=>(const LexElement& a, const LexElement& b) {
  int s = (b - a).sign();
  if (s > 0) return std::strong_ordering::less;
  if (s < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string LexElement::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) out << (i ? "," : "") << coords_[i].get_str();
  out << ")";
  return out.str();
}

std::strong_ordering lex_compare(const LexElement& a, const LexElement& b) { return a <=> b; }

std::string to_string(std::strong_ordering order) {
  if (order == std::strong_ordering::less) return "<";
  if (order == std::strong_ordering::greater) return ">";
  return "=";
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::much_less:
      return "much_less";
    case Relation::much_greater:
      return "much_greater";
    case Relation::equivalent:
      return "equivalent";
    case Relation::unknown:
      return "unknown";
  }
  return "?";
}

DominationVerdict archimedean(const LexElement& a, const LexElement& b) {
  if (a.is_zero() || b.is_zero()) throw UndefinedError("Archimedean comparison is undefined for zero");
  std::size_t ia = a.leading_index();
  std::size_t ib = b.leading_index();
  if (ia == ib) return {Relation::equivalent, "equal leading index " + std::to_string(ia)};
  std::string rule = "leading index " + std::to_string(ia) + " vs " + std::to_string(ib);
  return {ia > ib ? Relation::much_less : Relation::much_greater, rule};
}

namespace {

void require_positive(const LexElement& x) {
  if (x.sign() <= 0) throw ValidationError("subgroup parameter x must be positive, got " + x.to_string());
}

}  // namespace

bool subgroup_membership(const LexElement& a, const LexElement& x) {
  require_positive(x);
  return a.is_zero() || a.leading_index() > x.leading_index();
}

std::strong_ordering quotient_compare(const LexElement& a, const LexElement& b, const LexElement& x) {
  LexElement d = b - a;
  if (subgroup_membership(d, x)) return std::strong_ordering::equal;
  return d.sign() > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

LexElement quotient_image(const LexElement& a, const LexElement& x) {
  require_positive(x);
  return a.truncated(x.leading_index() + 1);
}

std::optional<Decomposition> decompose(const LexElement& b, const LexElement& a) {
  if (a.is_zero()) throw UndefinedError("cannot decompose against zero");
  std::size_t ia = a.leading_index();
  if (b.is_zero() || b.leading_index() > ia) return Decomposition{0, b};
  if (b.leading_index() < ia) return std::nullopt;
  Integer k;
  Integer r;
  mpz_tdiv_qr(k.get_mpz_t(), r.get_mpz_t(), b.leading_coefficient().get_mpz_t(), a.leading_coefficient().get_mpz_t());
  if (r != 0) return std::nullopt;
  return Decomposition{k, b - k * a};
}

PropertyAResult property_A_check(const LexElement& a, std::mt19937_64& rng, int samples) {
  if (a.is_zero()) throw UndefinedError("Property A is undefined for zero");
  PropertyAResult result;
  std::size_t lead = a.leading_index();
  Integer lc = abs(a.leading_coefficient());
  result.holds = lc == 1;
  if (!result.holds) {
    LexElement b = LexElement::unit(lead, 1);
    if (!decompose(b, a)) result.counterexample = b;
  }
  std::size_t length = std::max<std::size_t>(a.coordinates().size(), lead + 2) + 2;
  for (int s = 0; s < samples; ++s) {
    std::vector<Integer> c(length, 0);
    long leading = 0;
    while (leading == 0) leading = uniform_int(rng, -9, 9);
    c[lead] = leading;
    for (std::size_t i = lead + 1; i < length; ++i) c[i] = uniform_int(rng, -9, 9);
    LexElement b(std::move(c));
    ++result.samples;
    if (decompose(b, a)) {
      ++result.confirmations;
    } else if (!result.counterexample) {
      result.counterexample = b;
    }
  }
  if (result.holds && result.confirmations != result.samples) result.holds = false;
  return result;
}

std::string ChainVerdict::status() const {
  if (!chain_ok) return "failed_precondition";
  return combinations_ok ? "verified" : "dependent";
}

ChainVerdict chain_independence(const std::vector<LexElement>& elements, int trials, std::mt19937_64& rng) {
  if (elements.empty()) throw ValidationError("chain must be nonempty");
  ChainVerdict v;
  v.chain_ok = true;
  v.chain_witness = "0 < e_0 << ... << e_" + std::to_string(elements.size() - 1);
  for (std::size_t i = 0; i < elements.size() && v.chain_ok; ++i) {
    if (elements[i].sign() <= 0) {
      v.chain_ok = false;
      v.chain_witness = "e_" + std::to_string(i) + " = " + elements[i].to_string() + " is not positive";
      break;
    }
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (archimedean(elements[i], elements[j]).relation != Relation::much_less) {
        v.chain_ok = false;
        v.chain_witness = "e_" + std::to_string(i) + " is not dominated by e_" + std::to_string(j);
        break;
      }
    }
  }
  if (!v.chain_ok) return v;

  v.combinations_ok = true;
  for (int t = 0; t < trials; ++t) {
    std::vector<long> coeffs(elements.size());
    bool nonzero = false;
    while (!nonzero) {
      for (auto& c : coeffs) {
        c = uniform_int(rng, -9, 9);
        nonzero = nonzero || c != 0;
      }
    }
    LexElement sum;
    for (std::size_t i = 0; i < elements.size(); ++i) sum += Integer(coeffs[i]) * elements[i];
    ++v.trials_run;
    if (sum.is_zero()) {
      v.combinations_ok = false;
      v.vanishing_combination = coeffs;
      break;
    }
  }
  return v;
}

}  // namespace concord::ordered
