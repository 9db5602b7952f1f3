#pragma once

#include "fano/polygon.hpp"

#include <string>

namespace fano::cli {

struct SvgOptions {
  bool broken_line = false;
  int scale = 40;  // pixels per lattice unit
};

// Polygon fill, lattice dots, rays to the vertices, origin marker and an
// optional broken-line overlay. The viewport is the vertex bounding box padded
// by one lattice unit. Output is byte-for-byte deterministic.
std::string render_svg(const FanoPolygon& polygon, const SvgOptions& options = {});

}  // namespace fano::cli
