#pragma once

#include <json.hpp>

#include "symvar/rational.hpp"

namespace symvar {

/// Upper bounds for a degree-d multi-affine hypersurface in R^n.
struct ComponentBounds {
  unsigned degree = 0;
  unsigned n = 0;
  BigInt hypersurface;  // b0(Z(P)) <= 2^(d-1)
  BigInt complement;    // b0(R^n \ Z(P)) <= 2^d
  BigInt betti_sum;     // sum of Betti numbers <= d (2d-1)^(n-1)
};

ComponentBounds bounds(unsigned d, unsigned n);

/// {"ccez": ..., "ccdz": ..., "optm": ...}
nlohmann::json to_json(const ComponentBounds& b);

}  // namespace symvar
