#pragma once

#include <span>
#include <utility>
#include <vector>

#include "gridkit/grid.hpp"

namespace gridkit::detail {

struct BraidLayout {
  GridDiagram grid;
  /// Grid square (row, col) of the crossing produced by each braid letter.
  std::vector<std::pair<int, int>> letter_crossings;
};

/// Draws a braid with strands running upwards, each letter realised by one
/// horizontal jog of the under-strand, then closes it either as a braid
/// closure (nested arcs on the right) or as a plat (adjacent caps).
BraidLayout layout_braid(std::span<const int> word, int strands, bool plat);

}  // namespace gridkit::detail
