#pragma once

#include <string>

#include "elep/search.hpp"

namespace elep::cli {

/// SVG 1.1 figure of a realization: lattice dots covering the bounding box
/// and the filled parallelogram, at `scale` pixels per lattice unit.
/// Vertex labels are off unless `labels` is set.
std::string render_svg(const search::Realization& r, double scale, bool labels);

}  // namespace elep::cli
