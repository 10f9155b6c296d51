#include <numeric>
#include <set>

#include "concord/signature.hpp"

namespace concord::signature {

namespace {

std::string pair_label(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

}  // namespace

IndependenceCertificate torus_independence_certificate(const std::vector<std::pair<int, int>>& pairs, int k) {
  IndependenceCertificate cert{pairs, k, {}};
  auto& checks = cert.checks;

  checks.push_back({"filtration_level", k >= 1, "k = " + std::to_string(k)});
  checks.push_back({"nonempty", !pairs.empty(), std::to_string(pairs.size()) + " generators"});

  std::set<long> products;
  std::string repeated;
  for (auto [p, q] : pairs) {
    long pq = static_cast<long>(p) * q;
    if (!products.insert(pq).second && repeated.empty()) repeated = std::to_string(pq);
  }
  checks.push_back({"distinct_products", repeated.empty(),
                    repeated.empty() ? "all products distinct" : "product " + repeated + " repeated"});

  for (auto [p, q] : pairs) {
    std::string label = pair_label(p, q);
    bool coprime = p >= 2 && q >= 2 && std::gcd(p, q) == 1;
    checks.push_back({"coprime" + label, coprime, "gcd = " + std::to_string(std::gcd(p, q))});

    long pq = static_cast<long>(p) * q;
    long phi = pq > 0 ? totient(pq) : 0;
    bool gap = p > k && q > k && 2L * k < phi;
    checks.push_back({"degree_gap" + label, gap,
                      "2k = " + std::to_string(2L * k) + ", phi(pq) = " + std::to_string(phi) +
                          ", min(p,q) = " + std::to_string(std::min(p, q))});

    std::string witness = "no jump at a primitive root";
    bool primitive = false;
    if (coprime) {
      JumpFunction jumps = torus_jumps(p, q);
      for (const auto& [x, j] : jumps.jumps()) {
        if (x.get_den() == pq) {
          primitive = true;
          witness = to_string(x) + ": " + std::to_string(j);
          break;
        }
      }
    }
    checks.push_back({"primitive_jump" + label, primitive, witness});
  }
  return cert;
}

}  // namespace concord::signature
