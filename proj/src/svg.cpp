#include "rulerwrap/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rulerwrap {

namespace {

// Direction of side S_j (1-based) given t sides: S_t runs along +x and each
// forward hinge is a clockwise quarter turn, so dir(S_j) = ccw^(t-j) of +x.
std::pair<int, int> side_direction(int j, int t) {
  switch ((t - j) & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::vector<std::pair<Length, Length>> polyline_vertices(const std::vector<Length>& sides) {
  std::vector<std::pair<Length, Length>> pts;
  pts.emplace_back(0, 0);
  const int t = static_cast<int>(sides.size());
  Length x = 0, y = 0;
  for (int j = 1; j <= t; ++j) {
    const auto [dx, dy] = side_direction(j, t);
    x += dx * sides[static_cast<std::size_t>(j - 1)];
    y += dy * sides[static_cast<std::size_t>(j - 1)];
    pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace

RenderBox polyline_box(const std::vector<Length>& sides) {
  RenderBox box;
  for (const auto& [x, y] : polyline_vertices(sides)) {
    box.min_x = std::min(box.min_x, x);
    box.max_x = std::max(box.max_x, x);
    box.min_y = std::min(box.min_y, y);
    box.max_y = std::max(box.max_y, y);
  }
  return box;
}

std::string render_svg(const WrapWitness& witness) {
  const std::vector<Length>& sides = witness.side_sums;
  const int t = static_cast<int>(sides.size());
  if (t < 2 || t % 2 != 0) {
    throw std::invalid_argument("svg: witness must have an even side count >= 2");
  }
  for (int j = 0; j + 2 < t; ++j) {
    if (sides[j] > sides[j + 2]) {
      throw std::invalid_argument("svg: witness violates the wrapping chain constraints");
    }
  }

  const auto pts = polyline_vertices(sides);
  const RenderBox box = polyline_box(sides);
  const double larger = static_cast<double>(std::max(box.width(), box.height()));
  const double margin = 0.05 * larger;
  const double stroke = 0.02 * larger;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << (static_cast<double>(box.min_x) - margin) << " " << -margin << " "
      << (static_cast<double>(box.width()) + 2 * margin) << " "
      << (static_cast<double>(box.height()) + 2 * margin) << "\">\n";
  for (int j = 1; j <= t; ++j) {
    if (sides[static_cast<std::size_t>(j - 1)] == 0) {
      continue;
    }
    const auto& [x0, y0] = pts[static_cast<std::size_t>(j - 1)];
    const auto& [x1, y1] = pts[static_cast<std::size_t>(j)];
    const char* color = (j % 2 == 1) ? "#1f77b4" : "#d62728";
    // Reflect to the SVG y-down convention.
    svg << "  <line x1=\"" << x0 << "\" y1=\"" << (box.max_y - y0) << "\" x2=\"" << x1
        << "\" y2=\"" << (box.max_y - y1) << "\" stroke=\"" << color << "\" stroke-width=\""
        << stroke << "\" stroke-linecap=\"round\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace rulerwrap
