#pragma once

#include <string>
#include <utility>

#include "rulerwrap/core.hpp"

namespace rulerwrap {

// Axis-aligned extent of the rendered polyline in mathematical coordinates.
struct RenderBox {
  Length min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  Length width() const { return max_x - min_x; }
  Length height() const { return max_y - min_y; }
};

// Bounding box of the side polyline: S_t runs along +x and every hinge turns
// 90 degrees clockwise walking forward, so side directions are fixed by
// t - j parity.  For any valid witness this is exactly s_t wide and
// s_{t-1} tall.
RenderBox polyline_box(const std::vector<Length>& sides);

// Renders the witness polyline as a standalone SVG document.  Throws
// std::invalid_argument when the side chain violates the wrapping
// constraints against its own last two sides.
std::string render_svg(const WrapWitness& witness);

}  // namespace rulerwrap
