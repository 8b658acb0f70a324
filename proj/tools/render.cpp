#include "render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace simplex_cover::render {

namespace {

constexpr double kPixelsPerUnit = 100.0;
constexpr double kMargin = 20.0;

Vec2 map(const Rational& x, const Rational& y, bool equilateral) {
  if (!equilateral) return {x.to_double(), y.to_double()};
  // x - y/2 stays exact; only the sqrt(3)/2 factor is approximate.
  return {(x - y / 2).to_double(), y.to_double() * std::sqrt(3.0) / 2.0};
}

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

const char* fill_for(ElementKind kind) {
  switch (kind) {
    case ElementKind::top: return "#4c72b0";
    case ElementKind::base_a: return "#55a868";
    case ElementKind::base_b: return "#c44e52";
  }
  return "#888888";
}

}  // namespace

std::vector<Triangle> cover_triangles(const CoverSpec& cover, bool equilateral) {
  if (cover.d() != 2) throw std::invalid_argument("rendering supports d = 2 only");
  std::vector<Triangle> out;
  out.reserve(cover.size());
  for (const auto& e : cover.elements()) {
    const auto verts = e.simplex.vertices();
    Triangle t;
    for (std::size_t i = 0; i < 3; ++i) t[i] = map(verts[i][0], verts[i][1], equilateral);
    out.push_back(t);
  }
  return out;
}

Triangle target_outline(const CoverSpec& cover, bool equilateral) {
  const Rational side = Rational{cover.n()} + cover.delta();
  return {map(0, 0, equilateral), map(side, 0, equilateral), map(side, side, equilateral)};
}

std::string render_svg(const CoverSpec& cover, bool equilateral, bool labels) {
  const auto triangles = cover_triangles(cover, equilateral);
  const auto outline = target_outline(cover, equilateral);

  double min_x = std::numeric_limits<double>::max();
  double min_y = min_x;
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = max_x;
  auto extend = [&](const Triangle& t) {
    for (const auto& p : t) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  };
  extend(outline);
  for (const auto& t : triangles) extend(t);

  const double width = (max_x - min_x) * kPixelsPerUnit + 2 * kMargin;
  const double height = (max_y - min_y) * kPixelsPerUnit + 2 * kMargin;
  auto sx = [&](double x) { return (x - min_x) * kPixelsPerUnit + kMargin; };
  auto sy = [&](double y) { return (max_y - y) * kPixelsPerUnit + kMargin; };
  auto points = [&](const Triangle& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ' ';
      s += num(sx(t[i].x)) + "," + num(sy(t[i].y));
    }
    return s;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
      << "<!-- simplex-cover d=2 n=" << cover.n() << " delta=" << cover.delta().str()
      << " equilateral=" << (equilateral ? "true" : "false")
      << " scale=" << num(kPixelsPerUnit) << " -->\n";

  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto kind = cover.elements()[i].kind;
    svg << "<polygon class=\"cover " << to_string(kind) << "\" points=\"" << points(triangles[i])
        << "\" fill=\"" << fill_for(kind)
        << "\" fill-opacity=\"0.35\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  svg << "<polygon class=\"target\" points=\"" << points(outline)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

  if (labels) {
    for (std::size_t i = 0; i < triangles.size(); ++i) {
      const auto& t = triangles[i];
      const double cx = (t[0].x + t[1].x + t[2].x) / 3.0;
      const double cy = (t[0].y + t[1].y + t[2].y) / 3.0;
      svg << "<text x=\"" << num(sx(cx)) << "\" y=\"" << num(sy(cy))
          << "\" font-size=\"10\" text-anchor=\"middle\">" << to_string(cover.elements()[i].kind)
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace simplex_cover::render
