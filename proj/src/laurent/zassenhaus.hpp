#pragma once

#include <vector>

#include "laurent/dense.hpp"

namespace concord::laurent::detail {

/// Irreducible factors over Z of a primitive, square-free polynomial with
/// positive leading coefficient and degree >= 1. Each factor is primitive with
/// positive leading coefficient; the product equals f.
std::vector<dense::Poly> factor_square_free(const dense::Poly& f);

}  // namespace concord::laurent::detail
