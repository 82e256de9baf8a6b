#pragma once

#include <iosfwd>
#include <string>

#include "qtsp/geometry.hpp"

namespace qtsp {

// Reads {"name": string, "points": [[x, y], ...]}; unknown fields are
// ignored, "name" falls back to `origin`. Parse failures carry
// origin:line:column diagnostics.
EuclideanInstance read_instance_json(std::istream& in, const std::string& origin);

void write_instance_json(const EuclideanInstance& inst, std::ostream& out);

// TSPLIB subset: header lines "KEY : VALUE", then NODE_COORD_SECTION with
// rows "i x y" numbered 1..n. EDGE_WEIGHT_TYPE must be declared EUC_2D; any
// other declared type raises the unsupported-format error.
EuclideanInstance read_instance_tsplib(std::istream& in, const std::string& origin);

// Dispatches on the extension (.json / .tsp), otherwise on the first
// non-space byte ('{' means JSON).
EuclideanInstance load_instance(const std::string& path);

}  // namespace qtsp
