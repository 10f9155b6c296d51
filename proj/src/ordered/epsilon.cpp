#include <algorithm>

#include "concord/errors.hpp"
#include "concord/ordered.hpp"

namespace concord::ordered {

std::vector<std::string> EpsilonClass::problems() const {
  std::vector<std::string> out;
  if (epsilon_sign < -1 || epsilon_sign > 1) out.push_back("epsilon must be -1, 0 or 1");
  if (epsilon_sign == 1 && !a1) out.push_back("a1 missing for epsilon = +1");
  if (epsilon_sign != 1 && a1) out.push_back("a+ given for epsilon != +1");
  if (a2 && !a1) out.push_back("a2 given without a1");
  if (a1 && *a1 <= 0) out.push_back("a1 must be positive");
  if (a2 && *a2 <= 0) out.push_back("a2 must be positive");
  if (property_A && !property_A->provenance) out.push_back("property_A provenance missing");
  if (dominated_by_next && !dominated_by_next->provenance) out.push_back("dominated_by_next provenance missing");
  return out;
}

DominationVerdict compare_aplus(const EpsilonClass& k, const EpsilonClass& k_prime) {
  for (const auto* r : {&k, &k_prime}) {
    if (r->epsilon_sign != 1)
      throw InsufficientData("a+ comparison needs epsilon = +1, but " + r->label + " has epsilon = " +
                             std::to_string(r->epsilon_sign));
    if (!r->a1) throw InsufficientData("a1 of " + r->label + " is not recorded");
  }
  long a = *k.a1;
  long b = *k_prime.a1;
  if (a > b) return {Relation::much_less, "a1 " + std::to_string(a) + " > " + std::to_string(b) + ": larger a1 is dominated"};
  if (a < b)
    return {Relation::much_greater, "a1 " + std::to_string(a) + " < " + std::to_string(b) + ": larger a1 is dominated"};
  if (k.a2 && k_prime.a2 && *k.a2 != *k_prime.a2) {
    bool greater = *k.a2 > *k_prime.a2;
    return {greater ? Relation::much_greater : Relation::much_less,
            "equal a1, a2 " + std::to_string(*k.a2) + (greater ? " > " : " < ") + std::to_string(*k_prime.a2) +
                ": larger a2 dominates"};
  }
  return {Relation::unknown, "no comparison rule applies"};
}

long a2_upper_bound(long n) {
  if (n < 1) throw ValidationError("genus bound must be >= 1");
  return 2 * n - 1;
}

std::string to_string(EpsilonVerdict verdict) {
  return verdict == EpsilonVerdict::obstructs ? "obstructs" : "inconclusive";
}

EpsilonObstruction epsilon_obstruction(const EpsilonClass& j, long n) {
  if (n < 1) throw ValidationError("filtration index must be >= 1");
  if (!j.a1) throw InsufficientData("a1 of " + j.label + " is not recorded");
  if (*j.a1 != 1) throw RuleNotApplicable("obstruction needs a1 = 1, " + j.label + " has a1 = " + std::to_string(*j.a1));
  if (!j.a2) throw InsufficientData("a2 of " + j.label + " is not recorded");
  std::string cmp = "a2(" + j.label + ") = " + std::to_string(*j.a2);
  if (*j.a2 >= 2 * n)
    return {EpsilonVerdict::obstructs, cmp + " >= " + std::to_string(2 * n) + " exceeds a2 <= " +
                                           std::to_string(a2_upper_bound(n)) + " for genus <= " + std::to_string(n)};
  return {EpsilonVerdict::inconclusive, cmp + " < " + std::to_string(2 * n)};
}

std::string family_label(knots::Family family, int n) {
  switch (family) {
    case knots::Family::J:
      return "J_" + std::to_string(n);
    case knots::Family::Jprime:
      return "J'_" + std::to_string(n);
    case knots::Family::L:
      return "L_" + std::to_string(n);
  }
  return "?";
}

namespace {

void add_provenance(std::vector<Provenance>& list, const Provenance& p) {
  auto same = [&](const Provenance& q) { return q.origin == p.origin && q.source == p.source; };
  if (std::none_of(list.begin(), list.end(), same)) list.push_back(p);
}

}  // namespace

EpsilonCertificate summand_certificate_epsilon(int k, int max_index, const Registry& registry, knots::Family family,
                                               std::uint64_t seed) {
  if (family == knots::Family::Jprime) throw ValidationError("no a+ data is recorded for the J' family");
  bool summand = family == knots::Family::J;
  if (k < (summand ? 2 : 1)) throw RangeError("certificate needs k >= " + std::string(summand ? "2" : "1"));
  int first = summand ? k : 2 * k;
  if (max_index < first)
    throw RangeError("certificate needs N >= " + std::to_string(first) + ", got N = " + std::to_string(max_index));

  EpsilonCertificate cert;
  cert.family = family;
  cert.k = k;
  cert.first_index = first;
  cert.max_index = max_index;
  cert.obstruction_level = summand ? k / 2 : k;
  auto& checks = cert.checks;

  std::vector<const EpsilonClass*> members;
  for (int n = first; n <= max_index; ++n) {
    std::string label = family_label(family, n);
    const EpsilonClass* r = registry.find(label);
    std::vector<std::string> problems = r ? r->problems() : std::vector<std::string>{"no record"};
    checks.push_back({"record(" + label + ")", problems.empty(), problems.empty() ? "well formed" : problems.front()});
    members.push_back(problems.empty() ? r : nullptr);
    if (r) {
      cert.records.push_back(*r);
      add_provenance(cert.provenance, r->provenance);
      if (r->property_A && r->property_A->provenance) add_provenance(cert.provenance, *r->property_A->provenance);
      if (r->dominated_by_next && r->dominated_by_next->provenance)
        add_provenance(cert.provenance, *r->dominated_by_next->provenance);
    }
  }
  auto label_of = [&](std::size_t i) { return family_label(family, first + static_cast<int>(i)); };

  // The first member's obstruction puts G_level inside the kernel of the quotient.
  {
    Check c{"obstruction", false, "record unavailable"};
    if (members.front()) {
      try {
        EpsilonObstruction o = epsilon_obstruction(*members.front(), cert.obstruction_level);
        c.passed = o.verdict == EpsilonVerdict::obstructs;
        c.witness = o.reason;
      } catch (const Error& e) {
        c.witness = e.what();
      }
    }
    checks.push_back(c);
  }

  for (std::size_t i = 0; i < members.size(); ++i) {
    const EpsilonClass* r = members[i];
    checks.push_back({"positive(" + label_of(i) + ")", r && r->epsilon_sign == 1,
                      r ? "epsilon = " + std::to_string(r->epsilon_sign) : "record unavailable"});

    Check nonvanishing{"quotient_nonvanishing(" + label_of(i) + ")", false, "record unavailable"};
    if (r && members.front()) {
      if (i == 0) {
        nonvanishing.passed = true;
        nonvanishing.witness = "equivalent to the quotient parameter";
      } else {
        try {
          DominationVerdict v = compare_aplus(*r, *members.front());
          nonvanishing.passed = v.relation == Relation::much_greater;
          nonvanishing.witness = to_string(v.relation) + " than " + label_of(0) + " (" + v.rule_used + ")";
        } catch (const Error& e) {
          nonvanishing.witness = e.what();
        }
      }
    }
    checks.push_back(nonvanishing);

    if (summand) {
      Check a{"property_A(" + label_of(i) + ")", false, "no Property A datum"};
      if (r && r->property_A) {
        if (!r->property_A->provenance) {
          a.witness = "provenance missing";
        } else {
          a.passed = r->property_A->value;
          a.witness = std::string(r->property_A->value ? "true" : "false") + " (" +
                      to_string(r->property_A->provenance->origin) + ")";
        }
      }
      checks.push_back(a);
    }

    if (i + 1 < members.size()) {
      Check d{"domination(" + label_of(i) + "," + label_of(i + 1) + ")", false, "record unavailable"};
      if (r && members[i + 1]) {
        try {
          DominationVerdict v = compare_aplus(*r, *members[i + 1]);
          d.passed = v.relation == Relation::much_less;
          d.witness = v.rule_used;
        } catch (const Error& e) {
          d.witness = e.what();
        }
        if (summand) {
          const auto& flag = r->dominated_by_next;
          bool published = flag && flag->provenance && flag->value;
          d.passed = d.passed && published;
          d.witness += published ? "; published chain flag agrees" : "; published chain flag missing";
        }
      }
      checks.push_back(d);
    }
  }

  // Concrete model: member i maps to the unit vector at index (count - 1 - i),
  // so each member dominates the previous one.
  {
    std::mt19937_64 rng(seed);
    std::size_t count = members.size();
    std::vector<LexElement> images;
    for (std::size_t i = 0; i < count; ++i) images.push_back(LexElement::unit(count - 1 - i));
    const LexElement& x = images.front();
    ChainVerdict chain = chain_independence(images, 200, rng);
    bool ok = chain.status() == "verified";
    std::string witness = "chain " + chain.status() + " over " + std::to_string(chain.trials_run) + " combinations";
    for (const auto& e : images) {
      LexElement image = quotient_image(e, x);
      if (image.is_zero()) {
        ok = false;
        witness = "image of " + e.to_string() + " vanishes";
      } else if (summand && !property_A_check(image, rng, 50).holds) {
        ok = false;
        witness = "Property A fails for image " + image.to_string();
      }
    }
    checks.push_back({"lex_model_witness", ok, witness});
  }
  return cert;
}

}  // namespace concord::ordered
