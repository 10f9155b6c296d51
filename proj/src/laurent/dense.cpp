#include "laurent/dense.hpp"

#include <algorithm>

namespace concord::laurent::dense {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Integer& c) {
  if (c == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  if (p.empty()) return {};
  Integer c = content(p);
  if (lead(p) < 0) c = -c;
  Poly r(p);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.empty()) return std::nullopt;
  if (a.empty()) return Poly{};
  if (a.size() < b.size()) return std::nullopt;
  Poly rem(a);
  Poly q(a.size() - b.size() + 1);
  const Integer& lb = lead(b);
  Integer c;
  for (int k = degree(rem); k >= degree(b); --k) {
    const Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    auto shift = static_cast<std::size_t>(k - degree(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  trim(rem);
  if (!rem.empty()) return std::nullopt;
  trim(q);
  return q;
}

Poly pseudo_remainder(const Poly& a, const Poly& b) {
  Poly r(a);
  trim(r);
  const Integer& lb = lead(b);
  while (!r.empty() && degree(r) >= degree(b)) {
    Integer lr = lead(r);
    auto shift = static_cast<std::size_t>(degree(r) - degree(b));
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= lr * b[j];
    trim(r);
  }
  return r;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = primitive_part(a);
  Poly y = primitive_part(b);
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    Poly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return primitive_part(x);
}

Integer evaluate(const Poly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> parts;
  if (degree(f) < 1) return parts;
  Poly df = derivative(f);
  Poly a = gcd(f, df);
  Poly b = *divide_exact(f, a);
  Poly c = *divide_exact(df, a);
  Poly d = sub(c, derivative(b));
  int i = 1;
  while (degree(b) >= 1) {
    Poly ai = gcd(b, d);
    Poly next_b = *divide_exact(b, ai);
    Poly next_c = *divide_exact(d, ai);
    if (degree(ai) >= 1) parts.emplace_back(ai, i);
    b = std::move(next_b);
    d = sub(next_c, derivative(b));
    ++i;
  }
  return parts;
}

}  // namespace concord::laurent::dense
