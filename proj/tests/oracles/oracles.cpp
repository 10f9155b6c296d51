#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Int evaluate(const Dense& f, const Int& x) {
  Int v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<Int> divisors_with_sign(Int v) {
  v = abs(v);
  std::vector<Int> out;
  for (Int d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  return out;
}

// Lagrange interpolation through (xs[i], ys[i]); nullopt if not integral.
std::optional<Dense> interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  std::size_t n = xs.size();
  std::vector<Rat> result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis{1};
    Rat denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Rat> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= Rat(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < n; ++k) result[k] += basis[k] * ys[i] / denom;
  }
  Dense out;
  for (auto& r : result) {
    r.canonicalize();
    if (r.get_den() != 1) return std::nullopt;
    out.push_back(r.get_num());
  }
  trim(out);
  return out;
}

}  // namespace

Sparse multiply(const Sparse& f, const Sparse& g) {
  Sparse out;
  for (const auto& [a, x] : f)
    for (const auto& [b, y] : g) out[a + b] += x * y;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

long totient(long n) {
  long count = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::optional<Dense> divide(const Dense& f, const Dense& g) {
  Dense r = f;
  trim(r);
  Dense d = g;
  trim(d);
  if (d.empty()) return std::nullopt;
  if (r.size() < d.size()) return r.empty() ? std::optional<Dense>(Dense{}) : std::nullopt;
  Dense q(r.size() - d.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int top = r[i + d.size() - 1];
    if (top % d.back() != 0) return std::nullopt;
    q[i] = top / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

Dense cyclotomic(long n) {
  Dense f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = -1;
  f[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) f = *divide(f, cyclotomic(d));
  return f;
}

bool irreducible(const Dense& f) {
  std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Evaluation points avoiding roots of f.
    std::vector<Int> xs;
    std::vector<std::vector<Int>> choices;
    for (long x = 0; xs.size() < d + 1; ++x) {
      for (long s : {x, -x}) {
        if (xs.size() == d + 1 || (s == -x && x == 0)) continue;
        Int v = evaluate(f, s);
        if (v == 0) return false;
        xs.push_back(s);
        choices.push_back(divisors_with_sign(v));
      }
    }
    std::vector<std::size_t> idx(d + 1, 0);
    while (true) {
      std::vector<Int> ys;
      for (std::size_t i = 0; i <= d; ++i) ys.push_back(choices[i][idx[i]]);
      auto g = interpolate(xs, ys);
      if (g && g->size() == d + 1 && divide(f, *g)) return false;
      std::size_t i = 0;
      while (i <= d && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i > d) break;
    }
  }
  return true;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

Dense seifert_alexander(const std::vector<std::vector<Int>>& v) {
  std::size_t n = v.size();
  std::vector<Int> xs;
  std::vector<Int> ys;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(v[i][j]) - Rat(static_cast<long>(k)) * Rat(v[j][i]);
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(Rat(determinant(m)).get_num());
  }
  Dense f = *interpolate(xs, ys);
  std::size_t lo = 0;
  while (lo < f.size() && f[lo] == 0) ++lo;
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lo));
  if (!f.empty() && f.back() < 0)
    for (auto& c : f) c = -c;
  return f;
}

Rat burau_alexander_at(int strands, const std::vector<int>& word, const Rat& x) {
  auto n = static_cast<std::size_t>(strands);
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 1;
  for (int g : word) {
    auto i = static_cast<std::size_t>(std::abs(g) - 1);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, 0));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
    if (g > 0) {
      m[i][i] = 1 - x;
      m[i][i + 1] = x;
      m[i + 1][i] = 1;
      m[i + 1][i + 1] = 0;
    } else {
      m[i][i] = 0;
      m[i][i + 1] = 1;
      m[i + 1][i] = 1 / x;
      m[i + 1][i + 1] = 1 - 1 / x;
    }
    std::vector<std::vector<Rat>> p(n, std::vector<Rat>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (b[r][k] != 0)
          for (std::size_t c = 0; c < n; ++c) p[r][c] += b[r][k] * m[k][c];
    b = p;
  }
  std::vector<std::vector<Rat>> minor(n - 1, std::vector<Rat>(n - 1));
  for (std::size_t r = 0; r + 1 < n; ++r)
    for (std::size_t c = 0; c + 1 < n; ++c) minor[r][c] = Rat(r == c ? 1 : 0) - b[r][c];
  return determinant(minor);
}

Rat torus_upsilon_semigroup(int p, int q, const Rat& t) {
  int g = (p - 1) * (q - 1) / 2;
  std::vector<bool> in_s(static_cast<std::size_t>(2 * g + 1), false);
  for (int a = 0; a * p <= 2 * g; ++a)
    for (int b = 0; a * p + b * q <= 2 * g; ++b) in_s[static_cast<std::size_t>(a * p + b * q)] = true;
  Rat best;
  int count = 0;  // #(S cap [0, m))
  for (int m = 0; m <= 2 * g; ++m) {
    Rat v = Rat(-2 * count) - t * (g - m);
    if (m == 0 || v > best) best = v;
    if (in_s[static_cast<std::size_t>(m)]) ++count;
  }
  return best;
}

bool property_A_bruteforce(const std::vector<long>& a, std::size_t rank, long bound) {
  std::size_t lead = 0;
  while (lead < a.size() && a[lead] == 0) ++lead;
  std::vector<long> b(rank, -bound);
  auto dominated = [&](const std::vector<long>& c) {
    for (std::size_t i = 0; i <= lead && i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  };
  while (true) {
    bool equivalent = b[lead] != 0;
    for (std::size_t i = 0; i < lead; ++i) equivalent = equivalent && b[i] == 0;
    if (equivalent) {
      bool found = false;
      for (long k = -2 * bound; k <= 2 * bound && !found; ++k) {
        std::vector<long> c(rank);
        for (std::size_t i = 0; i < rank; ++i) c[i] = b[i] - k * (i < a.size() ? a[i] : 0);
        found = dominated(c);
      }
      if (!found) return false;
    }
    std::size_t i = 0;
    while (i < rank && ++b[i] > bound) b[i++] = -bound;
    if (i == rank) break;
  }
  return true;
}

}  // namespace oracle
