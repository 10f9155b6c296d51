#include "concord/ordered.hpp"

namespace concord::ordered {

namespace {

class Sampler {
 public:
  Sampler(std::size_t rank, std::mt19937_64& rng) : rank_(rank), rng_(rng) {}

  // Sparse coordinates in [-5, 5], so that leading indices vary.
  LexElement element() {
    std::vector<Integer> c(rank_, 0);
    for (auto& x : c)
      if (uniform_int(rng_, 0, 2) != 0) x = uniform_int(rng_, -5, 5);
    return LexElement(std::move(c));
  }

  LexElement nonzero() {
    LexElement e;
    while (e.is_zero()) e = element();
    return e;
  }

  LexElement positive() {
    LexElement e = nonzero();
    return e.sign() > 0 ? e : -e;
  }

  // Random element whose leading index is at most `index`, positive.
  LexElement positive_at_most(std::size_t index) {
    std::vector<Integer> c(rank_, 0);
    std::size_t lead = static_cast<std::size_t>(uniform_int(rng_, 0, static_cast<long>(index)));
    c[lead] = uniform_int(rng_, 1, 5);
    for (std::size_t i = lead + 1; i < rank_; ++i) c[i] = uniform_int(rng_, -5, 5);
    return LexElement(std::move(c));
  }

  // Random element of G_x.
  LexElement in_subgroup(const LexElement& x) {
    std::vector<Integer> c(rank_, 0);
    for (std::size_t i = x.leading_index() + 1; i < rank_; ++i) c[i] = uniform_int(rng_, -5, 5);
    return LexElement(std::move(c));
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::size_t rank_;
  std::mt19937_64& rng_;
};

void record(SuiteResult& s, bool ok, const std::string& what) {
  ++s.cases;
  if (!ok) {
    if (s.failures == 0) s.first_failure = what;
    ++s.failures;
  }
}

}  // namespace

std::vector<SuiteResult> quotient_property_suite(std::size_t rank, int cases, std::mt19937_64& rng) {
  Sampler sample(rank, rng);
  const auto lt = std::strong_ordering::less;
  auto named = [](const char* name) {
    SuiteResult s;
    s.name = name;
    return s;
  };
  SuiteResult well = named("well_definedness"), tri = named("trichotomy"), trans = named("transitivity"),
              transl = named("translation"), dom = named("domination_descent"), propA = named("property_A_descent");

  for (int i = 0; i < cases; ++i) {
    LexElement x = sample.positive();
    std::size_t ix = x.leading_index();

    {
      LexElement a = sample.element();
      LexElement b = a + sample.positive_at_most(ix) + sample.in_subgroup(x);
      LexElement c = sample.in_subgroup(x);
      bool ok = quotient_compare(a, b, x) == lt && quotient_compare(a + c, b, x) == lt &&
                quotient_compare(a, b + c, x) == lt;
      record(well, ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " x=" + x.to_string());
    }
    {
      LexElement a = sample.element();
      LexElement b = uniform_int(sample.rng(), 0, 1) ? sample.element() : a + sample.in_subgroup(x);
      auto ab = quotient_compare(a, b, x);
      auto ba = quotient_compare(b, a, x);
      int holding = (ab == lt) + (ba == lt) + (ab == 0 && ba == 0);
      bool consistent = (ab == 0) == (quotient_image(a, x) == quotient_image(b, x)) &&
                        ab == lex_compare(quotient_image(a, x), quotient_image(b, x));
      record(tri, holding == 1 && consistent, "a=" + a.to_string() + " b=" + b.to_string() + " x=" + x.to_string());
    }
    {
      LexElement a = sample.element();
      LexElement b = a + sample.positive_at_most(ix) + sample.in_subgroup(x);
      LexElement c = b + sample.positive_at_most(ix) + sample.in_subgroup(x);
      bool ok = quotient_compare(a, b, x) == lt && quotient_compare(b, c, x) == lt && quotient_compare(a, c, x) == lt;
      record(trans, ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " x=" + x.to_string());
    }
    {
      LexElement a = sample.element();
      LexElement b = sample.element();
      LexElement c = sample.element();
      bool ok = quotient_compare(a, b, x) == quotient_compare(a + c, b + c, x);
      record(transl, ok, "a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string() + " x=" + x.to_string());
    }
    {
      // 0 < a << b with b outside G_x.
      LexElement b = sample.positive_at_most(ix);
      std::size_t ib = b.leading_index();
      bool ok = true;
      std::string what = "b=" + b.to_string() + " x=" + x.to_string();
      if (ib + 1 < rank) {
        std::vector<Integer> c(rank, 0);
        std::size_t ia = static_cast<std::size_t>(uniform_int(sample.rng(), static_cast<long>(ib) + 1, static_cast<long>(rank) - 1));
        c[ia] = uniform_int(sample.rng(), 1, 5);
        for (std::size_t j = ia + 1; j < rank; ++j) c[j] = uniform_int(sample.rng(), -5, 5);
        LexElement a(std::move(c));
        what = "a=" + a.to_string() + " " + what;
        LexElement pa = quotient_image(a, x);
        LexElement pb = quotient_image(b, x);
        ok = a.sign() > 0 && archimedean(a, b).relation == Relation::much_less && !subgroup_membership(b, x) &&
             pa.sign() >= 0 && !pb.is_zero() && (pa.is_zero() || archimedean(pa, pb).relation == Relation::much_less);
      }
      record(dom, ok, what);
    }
    {
      std::vector<Integer> c(rank, 0);
      std::size_t lead = static_cast<std::size_t>(uniform_int(sample.rng(), 0, static_cast<long>(ix)));
      c[lead] = uniform_int(sample.rng(), 0, 1) ? 1 : -1;
      for (std::size_t j = lead + 1; j < rank; ++j) c[j] = uniform_int(sample.rng(), -5, 5);
      LexElement a(std::move(c));
      LexElement image = quotient_image(a, x);
      bool ok = !image.is_zero() && property_A_check(a, sample.rng(), 20).holds &&
                property_A_check(image, sample.rng(), 20).holds;
      record(propA, ok, "a=" + a.to_string() + " x=" + x.to_string());
    }
  }
  return {well, tri, trans, transl, dom, propA};
}

}  // namespace concord::ordered
