#pragma once

#include <string>

#include "gridkit/grid.hpp"

namespace gridkit {

/// One text line per row, top row first, one character per column:
/// X, O, '-' on a row segment, '|' on a column segment, '+' at crossings.
std::string draw_ascii(const GridDiagram& g);

/// Segments are drawn as <line> elements; each row segment is split at its
/// crossings (class "h", one more piece than it has crossings), columns are
/// whole (class "v").  Throws InvalidArgument for cell_px < 4.
std::string draw_svg(const GridDiagram& g, int cell_px = 24);

}  // namespace gridkit
