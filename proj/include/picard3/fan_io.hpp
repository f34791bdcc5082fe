#pragma once

// JSON exchange format for fans:
//
//   {
//     "dimension": 3,
//     "rays": [[1,0,0], [0,1,0], ...],
//     "maximal_cones": [[1,2,3], [1,2,4], ...],   // 1-based ray indices
//     "labels": ["v_1", ...]                       // optional
//   }
//
// Loading validates the fan data: ray generators must be primitive and
// pairwise distinct, cone indices in range and without repeats.  A loaded
// fan whose rays and cones match the X(n,b) layout exactly is recognised
// as a family fan, so divisor classes on it use the closed-form (e,f,g)
// basis instead of the generic Smith basis.

#include <string>

#include "picard3/fan.hpp"

namespace picard3 {

// Parse and validate; throws std::invalid_argument on malformed input.
Fan fan_from_json(const std::string& text);

std::string fan_to_json(const Fan& fan);

Fan load_fan(const std::string& path);
void save_fan(const Fan& fan, const std::string& path);

}  // namespace picard3
