#pragma once

#include <cstdint>
#include <vector>

#include "symvar/box.hpp"
#include "symvar/multi_affine.hpp"

namespace symvar::detail {

/// Exact signs of a multi-affine polynomial at the (res+1)^n grid vertices of a
/// box; axis 0 varies fastest.
std::vector<std::int8_t> lattice_signs(const MultiAffinePoly& p, const Box& box, unsigned res, unsigned threads);

}  // namespace symvar::detail
