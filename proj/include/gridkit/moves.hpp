#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gridkit/grid.hpp"

namespace gridkit {

/// How the closed marking intervals of two adjacent lines sit relative to
/// each other.  Rows compare column spans, columns compare row spans.
enum class IntervalRelation { Disjoint, Nested, Interleaved, SharedEndpoint };

enum class BandClass { Coherent, Uncoherent };

/// Position of the empty square inside the 2x2 block created by a
/// stabilization (north = higher row index, east = higher column index).
enum class Corner { NW, NE, SW, SE };

struct CyclicShift {
  Axis axis;
  int dir;  // +1 moves every row up (every column right), -1 the reverse
  bool operator==(const CyclicShift&) const = default;
};
struct Commutation {
  Axis axis;
  int index;  // swaps lines index and index + 1
  bool operator==(const Commutation&) const = default;
};
struct CrossingChange {
  Axis axis;
  int index;
  bool operator==(const CrossingChange&) const = default;
};
struct BandMove {
  Axis axis;
  int index;
  BandClass band;
  bool operator==(const BandMove&) const = default;
};
struct Stabilization {
  int row;
  Marking marking;
  Corner corner;
  bool operator==(const Stabilization&) const = default;
};
/// Standard destabilization of the 2x2 block whose lower-left square is
/// (row, col).
struct Destabilization {
  int row;
  int col;
  bool operator==(const Destabilization&) const = default;
};
/// Removal of the length-1 segment of line `index`.
struct GeneralizedDestabilization {
  Axis axis;
  int index;
  bool operator==(const GeneralizedDestabilization&) const = default;
};

using Move = std::variant<CyclicShift, Commutation, CrossingChange, BandMove, Stabilization, Destabilization,
                          GeneralizedDestabilization>;

IntervalRelation classify_adjacent(const GridDiagram& g, Axis axis, int i);

GridDiagram cyclic_shift(const GridDiagram& g, Axis axis, int dir);
/// Swap of adjacent lines with disjoint or nested spans.
GridDiagram commute(const GridDiagram& g, Axis axis, int i);
/// Swap of adjacent interleaved lines; changes exactly one crossing.
GridDiagram crossing_change(const GridDiagram& g, Axis axis, int i);

/// Oriented band: exchanges the X markings of lines i and i+1.
GridDiagram coherent_bs(const GridDiagram& g, Axis axis, int i);
/// Unoriented band: line i takes both O columns, line i+1 both X columns,
/// then each resulting component is reoriented to agree with the original
/// orientation at its first untouched marking.
GridDiagram uncoherent_bs(const GridDiagram& g, Axis axis, int i);

/// Replaces the marking of the given type in `row` by an L-shaped triple.
/// The new row and column are inserted on the sides opposite to `corner`.
GridDiagram stabilize(const GridDiagram& g, int row, Marking marking, Corner corner);
GridDiagram destabilize(const GridDiagram& g, int row, int col);
GridDiagram generalized_destabilize(const GridDiagram& g, Axis axis, int index);

/// Generalized destabilization sites that can be applied (length-1 segments
/// not forming an isolated 2x2 unknot), rows first.
std::vector<GeneralizedDestabilization> destabilization_sites(const GridDiagram& g);

GridDiagram apply_move(const GridDiagram& g, const Move& move);

struct MoveOptions {
  /// Adds crossing changes and band moves, which alter the link type.
  bool include_link_changing = false;
};

/// Every legal single move, in this order: cyclic shifts (rows +1, rows -1,
/// columns +1, columns -1); legal row then column commutations; stabilizations
/// by row, X before O, corners NW NE SW SE; standard destabilizations by block;
/// generalized destabilizations rows then columns.  With
/// include_link_changing: crossing changes, coherent bands, uncoherent bands.
std::vector<Move> legal_moves(const GridDiagram& g, MoveOptions options = {});
std::vector<std::pair<Move, GridDiagram>> perform_all_moves(const GridDiagram& g, MoveOptions options = {});

std::string to_json(const Move& move);
Move move_from_json(const std::string& text);

std::string_view to_string(IntervalRelation r);
std::string_view to_string(Corner c);
std::string_view to_string(Axis a);

}  // namespace gridkit
