#pragma once

#include <json.hpp>

#include "symvar/multi_affine.hpp"
#include "symvar/sparse_poly.hpp"

namespace symvar {

// {"n": 3, "terms": [{"vars": [1, 2], "coeff": "-1/2"}, ...]}
nlohmann::json to_json(const MultiAffinePoly& p);
MultiAffinePoly multi_affine_from_json(const nlohmann::json& j);

// {"n": 2, "terms": [{"exps": [2, 0], "coeff": "1"}, ...]}
nlohmann::json to_json(const SparsePoly& p);
SparsePoly sparse_from_json(const nlohmann::json& j);

/// True when the document uses the exponent-vector term layout.
bool is_sparse_json(const nlohmann::json& j);

}  // namespace symvar
