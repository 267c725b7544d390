#pragma once

#include "gridkit/grid.hpp"

namespace gridkit {

/// Reverses every component by exchanging the X and O markings.
GridDiagram invert_orientation(const GridDiagram& g);

/// Reflection in a vertical line; represents the mirror link.
GridDiagram mirror_grid(const GridDiagram& g);

/// Quarter turn counterclockwise.  Verticals become horizontals, so the
/// result represents the mirror link; four turns give the identity.
GridDiagram rotate(const GridDiagram& g);

/// Block-diagonal placement, `a` in the lower-left.
GridDiagram disjoint_union(const GridDiagram& a, const GridDiagram& b);

/// Connected sum on grid number n1 + n2 - 1.
///
/// The grids are stacked so that a boundary line of `a` and a boundary line
/// of `b` share one row (or column), and the shared square's two markings
/// cancel.  Four placements are tried in a fixed order and the first one that
/// introduces no crossing is used; if none exists the first placement is
/// used and the result carries one extra nugatory crossing.
GridDiagram connected_sum(const GridDiagram& a, const GridDiagram& b);

/// k parallel copies of every component, each shifted diagonally by one
/// square inside a k x k block.  The copies are pushed off along the front,
/// so two copies of a knot link tb times.
GridDiagram parallel_copies(const GridDiagram& g, int k);

}  // namespace gridkit
