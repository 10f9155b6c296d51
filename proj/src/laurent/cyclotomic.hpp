#pragma once

#include <utility>
#include <vector>

#include "laurent/dense.hpp"

namespace concord::laurent::detail {

/// Divisors d of n paired with mu(d), for the squarefree d only.
std::vector<std::pair<long, int>> mobius_divisors(long n);

dense::Poly cyclotomic_dense(long n);

/// Phi_n(x) as an integer.
Integer cyclotomic_value(long n, const Integer& x);

}  // namespace concord::laurent::detail
