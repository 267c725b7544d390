#include "gridkit/simplify.hpp"

#include <charconv>

#include "gridkit/error.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/rng.hpp"

namespace gridkit {

namespace {

struct Contact {
  int tb;
  int rot;
};

Contact contact_of(const GridDiagram& g) { return {thurston_bennequin(g), rotation_number(g)}; }

bool preserves(MoveMode mode, const Contact& before, const GridDiagram& after) {
  if (mode == MoveMode::Topological) return true;
  const Contact c = contact_of(after);
  if (mode == MoveMode::Legendrian) return c.tb == before.tb && c.rot == before.rot;
  return c.tb - c.rot == before.tb - before.rot;
}

bool is_destabilization(const Move& m) {
  return std::holds_alternative<Destabilization>(m) || std::holds_alternative<GeneralizedDestabilization>(m);
}

std::vector<Move> walk_moves(const GridDiagram& g) {
  std::vector<Move> moves;
  for (Axis axis : {Axis::Rows, Axis::Columns}) {
    moves.push_back(CyclicShift{axis, 1});
    moves.push_back(CyclicShift{axis, -1});
  }
  const GridDiagram t = transpose(g);
  for (Axis axis : {Axis::Rows, Axis::Columns}) {
    const GridDiagram& h = axis == Axis::Rows ? g : t;
    for (int i = 0; i + 1 < g.size(); ++i) {
      const IntervalRelation rel = classify_adjacent(h, Axis::Rows, i);
      if (rel == IntervalRelation::Disjoint || rel == IntervalRelation::Nested) moves.push_back(Commutation{axis, i});
    }
  }
  return moves;
}

int parse_positive(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1) {
    throw GridError(ErrorCode::InvalidArgument, "bad effort value '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

MoveMode parse_mode(std::string_view text) {
  if (text == "topological") return MoveMode::Topological;
  if (text == "legendrian") return MoveMode::Legendrian;
  if (text == "transverse") return MoveMode::Transverse;
  throw GridError(ErrorCode::InvalidArgument, "unknown mode '" + std::string(text) + "'");
}

std::string_view to_string(MoveMode mode) {
  switch (mode) {
    case MoveMode::Topological: return "topological";
    case MoveMode::Legendrian: return "legendrian";
    case MoveMode::Transverse: return "transverse";
  }
  return "";
}

EffortSpec parse_effort(std::string_view text, std::uint64_t seed) {
  if (text == "low") return {3, 0, seed, 5};
  if (text == "default") return {10, 0, seed, 20};
  if (text == "high") return {40, 0, seed, 50};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw GridError(ErrorCode::InvalidArgument, "bad effort '" + std::string(text) + "'");
  return {parse_positive(text.substr(0, colon)), parse_positive(text.substr(colon + 1)), seed};
}

bool permitted_kind(const Move& move, MoveMode mode) {
  if (mode == MoveMode::Topological) return true;
  if (std::holds_alternative<CrossingChange>(move) || std::holds_alternative<BandMove>(move)) return false;
  const auto* s = std::get_if<Stabilization>(&move);
  if (s == nullptr) return true;
  if (s->corner == Corner::NE || s->corner == Corner::SW) return true;
  return mode == MoveMode::Transverse &&
         ((s->marking == Marking::X && s->corner == Corner::SE) || (s->marking == Marking::O && s->corner == Corner::NW));
}

std::vector<Move> permitted_moves(const GridDiagram& g, MoveMode mode) {
  std::vector<Move> out;
  const Contact before = mode == MoveMode::Topological ? Contact{} : contact_of(g);
  for (const Move& m : legal_moves(g)) {
    if (!permitted_kind(m, mode)) continue;
    if (mode != MoveMode::Topological && is_destabilization(m) && !preserves(mode, before, apply_move(g, m))) continue;
    out.push_back(m);
  }
  return out;
}

GridDiagram destabilize_all(const GridDiagram& g) { return destabilize_all(g, MoveMode::Topological); }

GridDiagram destabilize_all(const GridDiagram& g, MoveMode mode) {
  GridDiagram cur = g;
  const Contact before = mode == MoveMode::Topological ? Contact{} : contact_of(g);
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& site : destabilization_sites(cur)) {
      GridDiagram next = generalized_destabilize(cur, site.axis, site.index);
      if (!preserves(mode, before, next)) continue;
      cur = std::move(next);
      progress = true;
      break;
    }
  }
  return cur.with_name(g.name());
}

GridDiagram simplify_grid(const GridDiagram& g, const EffortSpec& effort, MoveMode mode) {
  if (effort.rounds < 1 || effort.walk_length < 0 || effort.walk_per_n < 1) {
    throw GridError(ErrorCode::InvalidArgument, "effort must be positive");
  }
  const int walk = effort.walk_length > 0 ? effort.walk_length : effort.walk_per_n * g.size();
  const int floor = 2 * number_of_components(g);
  GridDiagram best = destabilize_all(g, mode);
  for (int round = 0; round < effort.rounds && best.size() > floor; ++round) {
    Rng rng(derive_seed(effort.seed, round));
    GridDiagram cur = destabilize_all(g, mode);
    for (int step = 0; step < walk && best.size() > floor; ++step) {
      const auto moves = walk_moves(cur);
      cur = destabilize_all(apply_move(cur, moves[rng.index(moves.size())]), mode);
      if (cur.size() < best.size()) best = cur;
    }
  }
  return best.with_name(g.name());
}

GridDiagram scramble_grid(const GridDiagram& g, int steps, MoveMode mode, std::uint64_t seed) {
  if (steps < 0) throw GridError(ErrorCode::InvalidArgument, "steps must be non-negative");
  Rng rng(seed);
  GridDiagram cur = g;
  for (int i = 0; i < steps; ++i) {
    const auto moves = permitted_moves(cur, mode);
    cur = apply_move(cur, moves[rng.index(moves.size())]);
  }
  return cur.with_name(g.name());
}

}  // namespace gridkit
