#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridkit/grid.hpp"
#include "gridkit/moves.hpp"

namespace gridkit {

enum class MoveMode { Topological, Legendrian, Transverse };

MoveMode parse_mode(std::string_view text);
std::string_view to_string(MoveMode mode);

struct EffortSpec {
  int rounds = 10;
  /// Moves per round; 0 means walk_per_n times the input grid number.
  int walk_length = 0;
  std::uint64_t seed = 0;
  int walk_per_n = 20;
};

/// "low" (3 rounds, 5n), "default" (10, 20n), "high" (40, 50n) or
/// "ROUNDS:WALK".  Throws InvalidArgument.
EffortSpec parse_effort(std::string_view text, std::uint64_t seed = 0);

/// Whether a move of this kind is allowed in `mode`, judged from the move
/// alone.  Destabilizations additionally need the invariant check done by
/// permitted_moves.
bool permitted_kind(const Move& move, MoveMode mode);

/// legal_moves restricted to `mode`.  In the contact modes the Legendrian
/// stabilizations are those with the empty square at NE or SW; transverse
/// mode adds X:SE and O:NW.  A destabilization is kept only when it leaves
/// the mode's invariants unchanged.
std::vector<Move> permitted_moves(const GridDiagram& g, MoveMode mode);

/// Applies the first generalized destabilization site until none is left.
GridDiagram destabilize_all(const GridDiagram& g);
/// Same, skipping sites that would change the mode's invariants.
GridDiagram destabilize_all(const GridDiagram& g, MoveMode mode);

/// Independent rounds, each seeded by derive_seed(seed, round): start from
/// destabilize_all(G), then walk through uniformly chosen commutations and
/// cyclic shifts, destabilizing after every step.  Returns the smallest grid
/// seen (earliest on ties).
GridDiagram simplify_grid(const GridDiagram& g, const EffortSpec& effort, MoveMode mode = MoveMode::Topological);

/// `steps` moves drawn uniformly from permitted_moves.
GridDiagram scramble_grid(const GridDiagram& g, int steps, MoveMode mode, std::uint64_t seed);

}  // namespace gridkit
