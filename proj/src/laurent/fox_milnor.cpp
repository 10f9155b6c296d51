#include <algorithm>

#include "concord/errors.hpp"
#include "concord/factor.hpp"

namespace concord::laurent {

namespace {

void require_normalized(const LaurentPolynomial& f, const char* operation) {
  if (f.is_zero()) throw UndefinedError(std::string(operation) + " of the zero polynomial");
  Integer at_one = f.value_at_one();
  if (at_one != 1 && at_one != -1)
    throw NormalizationRequired(std::string(operation) + " requires f(1) = +-1, got f(1) = " + at_one.get_str());
}

}  // namespace

FoxMilnorResult fox_milnor(const LaurentPolynomial& f) {
  require_normalized(f, "fox_milnor");
  FoxMilnorResult result;
  result.factorization = factor(f);
  const auto& factors = result.factorization.factors;

  LaurentPolynomial witness(1L);
  for (const auto& fac : factors) {
    LaurentPolynomial partner = canonical_reciprocal(fac.polynomial);
    if (partner == fac.polynomial) {
      if (fac.multiplicity % 2 != 0) result.unpaired.push_back(fac);
      else witness *= fac.polynomial.pow(static_cast<unsigned>(fac.multiplicity / 2));
      continue;
    }
    auto it = std::find_if(factors.begin(), factors.end(),
                           [&](const Factor& other) { return other.polynomial == partner; });
    if (it == factors.end() || it->multiplicity != fac.multiplicity) {
      result.unpaired.push_back(fac);
      continue;
    }
    // Each pair contributes its canonically larger member.
    if (canonical_less(partner, fac.polynomial))
      witness *= fac.polynomial.pow(static_cast<unsigned>(fac.multiplicity));
  }
  result.passes = result.unpaired.empty();
  if (result.passes) result.witness = witness;
  return result;
}

SplittingGenusBound gsp_lower_bound(const LaurentPolynomial& f) {
  require_normalized(f, "gsp_lower_bound");
  SplittingGenusBound out;
  out.bound = 0;
  int best = -1;
  for (const auto& fac : factor(f).factors) {
    // p and p(t^-1) always occur together in an Alexander polynomial, so only
    // self-reciprocal factors can be left unpaired.
    if (fac.multiplicity % 2 == 0 || !is_self_reciprocal(fac.polynomial)) continue;
    int b = breadth(fac.polynomial);
    if (b > best) {
      best = b;
      out.witness = fac;
    }
  }
  if (best > 0) out.bound = Rational(best, 2);
  out.bound.canonicalize();
  return out;
}

}  // namespace concord::laurent
