#pragma once

#include <vector>

#include "gridkit/grid.hpp"

namespace gridkit {

/// Intersection of the vertical segment of column `col` (always over) with
/// the horizontal segment of row `row`.
struct Crossing {
  int row;
  int col;
  int sign;  // +1 right-handed, -1 left-handed

  bool operator==(const Crossing&) const = default;
};

/// Front cusps of the Legendrian link carried by the grid.
struct CuspCount {
  int ascending = 0;
  int descending = 0;

  int total() const { return ascending + descending; }
};

int number_of_components(const GridDiagram& g);

/// Component id (0-based, ordered by lowest row) for every row.
std::vector<int> row_components(const GridDiagram& g);

/// Row-major list of crossings.
std::vector<Crossing> crossings(const GridDiagram& g);
int writhe(const GridDiagram& g);
int crossing_number(const GridDiagram& g);

/// Sum of all horizontal and vertical segment lengths.
int grid_length(const GridDiagram& g);
inline int grid_number(const GridDiagram& g) { return g.size(); }

// The Legendrian front of a grid with vertical overpasses is the grid turned
// 45 degrees counterclockwise.  A marking is a cusp when both of its segments
// leave it towards the same side of the front, which happens exactly at the
// north-west corners (segments run right and down) and the south-east corners
// (segments run left and up) of the curve.
enum class CornerShape { NorthWest, NorthEast, SouthWest, SouthEast };
CornerShape corner_shape(const GridDiagram& g, int row, Marking marking);
bool is_cusp(CornerShape shape);

CuspCount cusps(const GridDiagram& g);
int ascending_cusps(const GridDiagram& g);
int descending_cusps(const GridDiagram& g);

/// writhe - cusps / 2, summed over components.
int thurston_bennequin(const GridDiagram& g);
/// (descending - ascending) / 2.
int rotation_number(const GridDiagram& g);
/// thurston_bennequin - rotation_number.
int self_linking(const GridDiagram& g);

}  // namespace gridkit
