#pragma once

#include <array>
#include <string>
#include <vector>

#include "simplex_cover/cover.hpp"

namespace simplex_cover::render {

struct Vec2 {
  double x;
  double y;
};

using Triangle = std::array<Vec2, 3>;

/// Vertices of every cover element, optionally sheared by
/// M = [[1, -1/2], [0, sqrt(3)/2]]. Exact until the final conversion.
std::vector<Triangle> cover_triangles(const CoverSpec& cover, bool equilateral);

/// Outline of S^{n+delta}: (0,0), (n+delta, 0), (n+delta, n+delta).
Triangle target_outline(const CoverSpec& cover, bool equilateral);

/// Static SVG of a d = 2 cover. y grows upwards in the drawing.
std::string render_svg(const CoverSpec& cover, bool equilateral, bool labels);

}  // namespace simplex_cover::render
