#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "concord/signature.hpp"

namespace concord::signature {

BraidWord BraidWord::torus(int p, int q) {
  if (p < 1 || q < 0) throw ValidationError("torus braid needs p >= 1 and q >= 0");
  BraidWord word{p, {}};
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) word.generators.push_back(i);
  return word;
}

namespace {

void validate_word(const BraidWord& word) {
  if (word.strands < 1) throw ValidationError("braid needs at least one strand");
  for (int g : word.generators)
    if (g == 0 || std::abs(g) >= word.strands)
      throw ValidationError("generator " + std::to_string(g) + " out of range for " + std::to_string(word.strands) +
                            " strands");
}

}  // namespace

bool closes_to_knot(const BraidWord& word) {
  validate_word(word);
  std::vector<int> perm(static_cast<std::size_t>(word.strands));
  for (int i = 0; i < word.strands; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int g : word.generators) {
    auto i = static_cast<std::size_t>(std::abs(g) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  int length = 0;
  int x = 0;
  do {
    x = perm[static_cast<std::size_t>(x)];
    ++length;
  } while (x != 0);
  return length == word.strands;
}

SeifertMatrix seifert_from_braid(const BraidWord& word) {
  if (!closes_to_knot(word)) throw ValidationError("braid closure is not a knot");
  const auto& w = word.generators;
  auto sign = [&](std::size_t k) { return w[k] > 0 ? 1 : -1; };

  // One generator per pair of consecutive crossings in the same column:
  // the loop through the two bands and the Seifert disks between them.
  struct Loop {
    int column;
    std::size_t first;
    std::size_t second;
  };
  std::vector<Loop> loops;
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (std::size_t l = k + 1; l < w.size(); ++l) {
      if (std::abs(w[l]) == std::abs(w[k])) {
        loops.push_back({std::abs(w[k]), k, l});
        break;
      }
    }
  }

  std::size_t n = loops.size();
  SeifertMatrix v;
  v.entries.assign(n, std::vector<Integer>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const Loop& la = loops[a];
    v.entries[a][a] = -(sign(la.first) + sign(la.second)) / 2;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Loop& lb = loops[b];
      if (lb.column == la.column && lb.first == la.second) {
        int e = sign(la.second);
        v.entries[a][b] = (e + 1) / 2;
        v.entries[b][a] = (e - 1) / 2;
      }
      if (lb.column == la.column + 1) {
        if (la.first < lb.first && lb.first < la.second && la.second < lb.second) v.entries[a][b] -= 1;
        if (lb.first < la.first && la.first < lb.second && lb.second < la.second) v.entries[b][a] += 1;
      }
    }
  }
  Integer d = skew_determinant(v);
  if (d != 1 && d != -1) throw Error("internal: Seifert matrix has det(V - V^T) = " + d.get_str());
  return v;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer skew_determinant(const SeifertMatrix& v) {
  std::size_t n = v.size();
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = v.entries[i][j] - v.entries[j][i];
  return determinant(std::move(m));
}

int numeric_signature(const SeifertMatrix& v, const Rational& x) {
  if (x <= 0 || x >= 1) throw ValidationError("evaluation point " + to_string(x) + " is outside (0,1)");
  auto n = static_cast<Eigen::Index>(v.size());
  if (n == 0) return 0;
  double angle = 2 * std::numbers::pi * to_double(x);
  std::complex<double> w(std::cos(angle), std::sin(angle));
  std::complex<double> a = 1.0 - w;
  std::complex<double> b = 1.0 - std::conj(w);
  Eigen::MatrixXcd h(n, n);
  double v_norm = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double vij = v.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get_d();
      double vji = v.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].get_d();
      h(i, j) = a * vij + b * vji;
      v_norm += vij * vij;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue iteration did not converge");

  // Computed eigenvalues are exact for some H + E with ||E|| <= c n eps ||H||;
  // rounding of w perturbs H by at most 4 eps ||V||. Weyl's inequality then
  // certifies every sign whose eigenvalue clears the combined bound.
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double bound = 64.0 * static_cast<double>(n) * eps * h.norm() + 8.0 * eps * std::sqrt(v_norm);
  int signature = 0;
  for (double lambda : solver.eigenvalues()) {
    if (std::abs(lambda) <= bound)
      throw NumericalError("eigenvalue " + std::to_string(lambda) + " within error bound of zero at x = " +
                           to_string(x));
    signature += lambda > 0 ? 1 : -1;
  }
  return signature;
}

}  // namespace concord::signature
