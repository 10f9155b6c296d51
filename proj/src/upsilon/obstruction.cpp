#include <numeric>

#include "concord/errors.hpp"
#include "concord/upsilon.hpp"

namespace concord::upsilon {

JumpGerm JumpGerm::make(Rational first_singularity, Rational jump_value, bool zero_before, Provenance provenance) {
  if (first_singularity <= 0 || first_singularity >= 2)
    throw ValidationError("germ singularity must lie in (0,2)");
  if (jump_value == 0) throw ValidationError("germ jump value must be nonzero");
  return JumpGerm{std::move(first_singularity), std::move(jump_value), zero_before, std::move(provenance)};
}

JumpGerm JumpGerm::operator-() const {
  JumpGerm g(*this);
  g.jump_value = -g.jump_value;
  return g;
}

JumpGerm jprime_germ(int n) {
  if (n < 2) throw RangeError("J'_n germ needs n >= 2, got " + std::to_string(n));
  return JumpGerm::make(make_rational(2, 2L * n - 1), Rational(2 * n - 1), true,
                        {Origin::published, "Delta Upsilon' of J'_" + std::to_string(n) + " on (0, 2/(2n-1)]"});
}

namespace {

Rational germ_delta_prime(const JumpGerm& germ, const Rational& t) {
  if (t == germ.first_singularity) return germ.jump_value;
  if (t < germ.first_singularity && germ.zero_before) return 0;
  throw InsufficientData("germ data does not determine Delta Upsilon' at t = " + to_string(t) +
                         " (certified range ends at " + to_string(germ.first_singularity) + ")");
}

}  // namespace

Rational oss_hom(const UpsilonSource& source, long p, long q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1) throw ValidationError("oss_hom needs a reduced positive fraction p/q");
  Rational t = make_rational(p, q);
  if (t >= 2) throw ValidationError("oss_hom needs p/q < 2");
  Rational jump = std::holds_alternative<JumpGerm>(source) ? germ_delta_prime(std::get<JumpGerm>(source), t)
                                                           : delta_prime(std::get<PiecewiseLinearFunction>(source), t);
  return p % 2 == 0 ? Rational(jump / q) : Rational(jump / (2 * q));
}

long min_genus_from_singularity(long p, long q) {
  if (p <= 0 || q <= 0 || std::gcd(p, q) != 1 || p >= 2 * q)
    throw ValidationError("singularity must be a reduced fraction in (0,2)");
  return p % 2 != 0 ? q : (q + 1) / 2;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::obstructed:
      return "obstructed";
    case Verdict::not_obstructed:
      return "not_obstructed";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ObstructionResult obstruct_Gn(const UpsilonSource& source, int n) {
  if (n < 1) throw ValidationError("filtration index must be >= 1");
  Rational bound = make_rational(1, n);
  if (const auto* f = std::get_if<PiecewiseLinearFunction>(&source)) {
    for (const auto& t : f->singularities()) {
      if (t >= bound) break;
      return {Verdict::obstructed, t,
              "Delta Upsilon'(" + to_string(t) + ") = " + to_string(delta_prime(*f, t)) + " with " + to_string(t) +
                  " < 1/" + std::to_string(n)};
    }
    return {Verdict::not_obstructed, std::nullopt, "no singularity in (0, 1/" + std::to_string(n) + ")"};
  }
  const auto& germ = std::get<JumpGerm>(source);
  if (germ.first_singularity < bound)
    return {Verdict::obstructed, germ.first_singularity,
            "Delta Upsilon'(" + to_string(germ.first_singularity) + ") = " + to_string(germ.jump_value) + " with " +
                to_string(germ.first_singularity) + " < 1/" + std::to_string(n)};
  if (germ.zero_before)
    return {Verdict::not_obstructed, std::nullopt,
            "germ vanishes on (0, " + to_string(germ.first_singularity) + ") which covers (0, 1/" + std::to_string(n) +
                ")"};
  return {Verdict::inconclusive, std::nullopt, "germ carries no data on (0, " + to_string(germ.first_singularity) + ")"};
}

UpsilonCertificate summand_certificate_upsilon(int k, int max_index) {
  if (k < 2 || max_index < k)
    throw RangeError("certificate needs 2 <= k <= N, got k = " + std::to_string(k) + ", N = " + std::to_string(max_index));
  UpsilonCertificate cert;
  cert.k = k;
  cert.max_index = max_index;
  auto size = static_cast<std::size_t>(max_index - k + 1);
  cert.matrix.assign(size, std::vector<std::optional<Rational>>(size));

  bool diagonal = true;
  bool upper = true;
  bool provenance = true;
  std::string diagonal_witness = "all 1";
  std::string upper_witness = "all 0";
  for (int n = k; n <= max_index; ++n) {
    JumpGerm germ = jprime_germ(n);
    provenance = provenance && germ.provenance.origin == Origin::published && !germ.provenance.source.empty();
    cert.provenance.push_back(germ.provenance);
    for (int m = k; m <= max_index; ++m) {
      std::optional<Rational> entry;
      try {
        entry = oss_hom(germ, 2, 2L * m - 1);
      } catch (const InsufficientData&) {
      }
      cert.matrix[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(m - k)] = entry;
      std::string where = "M[" + std::to_string(n) + "][" + std::to_string(m) + "]";
      if (m == n && (!entry || *entry != 1)) {
        diagonal = false;
        diagonal_witness = where + " = " + (entry ? to_string(*entry) : "undetermined");
      }
      if (m > n && (!entry || *entry != 0)) {
        upper = false;
        upper_witness = where + " = " + (entry ? to_string(*entry) : "undetermined");
      }
    }
  }

  bool in_range = true;
  Rational limit = make_rational(1, k - 1);
  std::string range_witness = "2/" + std::to_string(2 * k - 1) + " is the largest point, below 1/" + std::to_string(k - 1);
  for (int m = k; m <= max_index; ++m) {
    Rational t = make_rational(2, 2L * m - 1);
    if (t <= 0 || t >= limit) {
      in_range = false;
      range_witness = to_string(t) + " is not in (0, 1/" + std::to_string(k - 1) + ")";
    }
  }

  cert.checks.push_back({"diagonal_unit", diagonal, diagonal_witness});
  cert.checks.push_back({"upper_zero", upper, upper_witness});
  cert.checks.push_back({"evaluation_points_in_range", in_range, range_witness});
  cert.checks.push_back({"germ_provenance", provenance, "published germ data for J'_n"});
  return cert;
}

}  // namespace concord::upsilon
