#pragma once

#include <string>

#include <json.hpp>

#include "ouschro/grid.hpp"

namespace ouschro {

using Json = nlohmann::ordered_json;

/// 17-significant-digit decimal rendering (round-trips doubles exactly).
std::string fmt17(double v);

/// Field snapshot CSV: header x1[,x2[,x3]],re,im, rows in row-major node
/// order.
void write_field_csv(const std::string& path, const Field& f);

/// Reads a snapshot written by write_field_csv onto the given grid; node
/// coordinates are cross-checked against the grid.
Field read_field_csv(const std::string& path, const Grid& grid);

/// Flat record {m, re_a, im_a, re_b[], im_b[], re_c, im_c}.
Json gaussian_to_json(const GaussianExponential& g);
GaussianExponential gaussian_from_json(const Json& j);

Json grid_to_json(const Grid& g);

/// Writes text through a temp file and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ouschro
