#include "gridkit/moves.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>

#include "gridkit/error.hpp"
#include "gridkit/invariants.hpp"
#include "json.hpp"

namespace gridkit {

namespace {

void check_adjacent_index(const GridDiagram& g, int i) {
  if (i < 0 || i > g.size() - 2) {
    throw GridError(ErrorCode::IndexOutOfRange, "adjacent pair index " + std::to_string(i));
  }
}

IntervalRelation classify_rows(const GridDiagram& g, int i) {
  const int a1 = std::min(g.x(i), g.o(i)), b1 = std::max(g.x(i), g.o(i));
  const int a2 = std::min(g.x(i + 1), g.o(i + 1)), b2 = std::max(g.x(i + 1), g.o(i + 1));
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return IntervalRelation::SharedEndpoint;
  if (b1 < a2 || b2 < a1) return IntervalRelation::Disjoint;
  if ((a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2)) return IntervalRelation::Nested;
  return IntervalRelation::Interleaved;
}

GridDiagram swap_rows(const GridDiagram& g, int i) {
  std::vector<int> xs(g.xs().begin(), g.xs().end());
  std::vector<int> os(g.os().begin(), g.os().end());
  std::swap(xs[i], xs[i + 1]);
  std::swap(os[i], os[i + 1]);
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

// Applies a row operation directly, or to the transpose for columns.
template <typename RowOp>
GridDiagram on_axis(const GridDiagram& g, Axis axis, RowOp op) {
  if (axis == Axis::Rows) return op(g);
  return transpose(op(transpose(g)));
}

// Assigns X/O to an unoriented grid (two columns per row) so that each
// component keeps the type of its first unmoved square in row-major order.
GridDiagram reorient(const GridDiagram& original, const std::vector<std::pair<int, int>>& rows,
                     const std::vector<std::pair<int, int>>& moved) {
  const int n = original.size();
  std::vector<std::array<int, 2>> col_rows(n, {-1, -1});
  for (int r = 0; r < n; ++r) {
    for (int c : {rows[r].first, rows[r].second}) {
      auto& slot = col_rows[c];
      (slot[0] == -1 ? slot[0] : slot[1]) = r;
    }
  }
  auto other_col = [&](int r, int c) { return rows[r].first == c ? rows[r].second : rows[r].first; };
  auto other_row = [&](int c, int r) { return col_rows[c][0] == r ? col_rows[c][1] : col_rows[c][0]; };
  auto is_moved = [&](int r, int c) {
    return std::find(moved.begin(), moved.end(), std::pair{r, c}) != moved.end();
  };

  std::vector<int> xs(n, -1), os(n, -1);
  for (int r = 0; r < n; ++r) {
    for (int c : {std::min(rows[r].first, rows[r].second), std::max(rows[r].first, rows[r].second)}) {
      if (xs[r] != -1 || is_moved(r, c)) continue;
      // Walk the component starting along row r, collecting squares; even
      // positions are O (segments leave an O horizontally).
      std::vector<std::pair<int, int>> cycle;
      int cr = r, cc = c;
      do {
        cycle.emplace_back(cr, cc);
        cc = other_col(cr, cc);
        cycle.emplace_back(cr, cc);
        cr = other_row(cc, cr);
      } while (!(cr == r && cc == c));
      const bool flip = original.has_x(r, c);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const bool is_o = (k % 2 == 0) != flip;
        auto [sr, sc] = cycle[k];
        (is_o ? os[sr] : xs[sr]) = sc;
      }
    }
  }
  return GridDiagram(std::move(xs), std::move(os), original.name());
}

GridDiagram uncoherent_rows(const GridDiagram& g, int i) {
  std::vector<std::pair<int, int>> rows(g.size());
  for (int r = 0; r < g.size(); ++r) rows[r] = {g.o(r), g.x(r)};
  rows[i] = {g.o(i), g.o(i + 1)};
  rows[i + 1] = {g.x(i), g.x(i + 1)};
  return reorient(g, rows, {{i, g.o(i + 1)}, {i + 1, g.x(i)}});
}

GridDiagram generalized_destabilize_rows(const GridDiagram& g, int i) {
  const int n = g.size();
  if (n <= 2) throw GridError(ErrorCode::TooSmall, "cannot destabilize a 2x2 grid");
  if (i < 0 || i >= n) throw GridError(ErrorCode::IndexOutOfRange, "line " + std::to_string(i));
  const int a = std::min(g.x(i), g.o(i));
  if (std::max(g.x(i), g.o(i)) != a + 1) {
    throw GridError(ErrorCode::NotDestabilizable, "line " + std::to_string(i) + " is not a length-1 segment");
  }
  const int p = g.x(i) == a ? g.row_of_o(a) : g.row_of_x(a);
  const int q = g.x(i) == a + 1 ? g.row_of_o(a + 1) : g.row_of_x(a + 1);
  if (p == q) throw GridError(ErrorCode::TrivialConfiguration, "segment belongs to an isolated 2x2 unknot");

  auto merge_col = [a](int c) { return c <= a ? c : c - 1; };
  std::vector<int> xs, os;
  xs.reserve(n - 1);
  os.reserve(n - 1);
  for (int r = 0; r < n; ++r) {
    if (r == i) continue;
    xs.push_back(merge_col(g.x(r)));
    os.push_back(merge_col(g.o(r)));
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

bool is_length_one(const GridDiagram& g, Axis axis, int i) {
  if (axis == Axis::Rows) return std::abs(g.x(i) - g.o(i)) == 1;
  return std::abs(g.row_of_x(i) - g.row_of_o(i)) == 1;
}

// The row/column of the length-1 segment's partners coincide exactly for an
// isolated 2x2 unknot.
bool is_trivial_site(const GridDiagram& g, Axis axis, int i) {
  if (axis == Axis::Columns) return is_trivial_site(transpose(g), Axis::Rows, i);
  const int a = std::min(g.x(i), g.o(i));
  const int p = g.x(i) == a ? g.row_of_o(a) : g.row_of_x(a);
  const int q = g.x(i) == a + 1 ? g.row_of_o(a + 1) : g.row_of_x(a + 1);
  return p == q;
}

}  // namespace

IntervalRelation classify_adjacent(const GridDiagram& g, Axis axis, int i) {
  check_adjacent_index(g, i);
  return axis == Axis::Rows ? classify_rows(g, i) : classify_rows(transpose(g), i);
}

GridDiagram cyclic_shift(const GridDiagram& g, Axis axis, int dir) {
  const int n = g.size();
  const int d = ((dir % n) + n) % n;
  std::vector<int> xs(n), os(n);
  for (int r = 0; r < n; ++r) {
    if (axis == Axis::Rows) {
      xs[(r + d) % n] = g.x(r);
      os[(r + d) % n] = g.o(r);
    } else {
      xs[r] = (g.x(r) + d) % n;
      os[r] = (g.o(r) + d) % n;
    }
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

GridDiagram commute(const GridDiagram& g, Axis axis, int i) {
  const IntervalRelation rel = classify_adjacent(g, axis, i);
  if (rel != IntervalRelation::Disjoint && rel != IntervalRelation::Nested) {
    throw GridError(ErrorCode::IllegalCommutation, std::string(to_string(rel)) + " lines");
  }
  return on_axis(g, axis, [i](const GridDiagram& h) { return swap_rows(h, i); });
}

GridDiagram crossing_change(const GridDiagram& g, Axis axis, int i) {
  if (classify_adjacent(g, axis, i) != IntervalRelation::Interleaved) {
    throw GridError(ErrorCode::NotInterleaved, "lines " + std::to_string(i) + "," + std::to_string(i + 1));
  }
  return on_axis(g, axis, [i](const GridDiagram& h) { return swap_rows(h, i); });
}

GridDiagram coherent_bs(const GridDiagram& g, Axis axis, int i) {
  if (classify_adjacent(g, axis, i) == IntervalRelation::SharedEndpoint) {
    throw GridError(ErrorCode::NotABandSite, "lines share a marking column");
  }
  GridDiagram out = on_axis(g, axis, [i](const GridDiagram& h) {
    std::vector<int> xs(h.xs().begin(), h.xs().end());
    std::swap(xs[i], xs[i + 1]);
    return GridDiagram(std::move(xs), std::vector<int>(h.os().begin(), h.os().end()), h.name());
  });
  if (std::abs(number_of_components(out) - number_of_components(g)) != 1) {
    throw GridError(ErrorCode::WrongBandClass, "band does not change the component count");
  }
  return out;
}

GridDiagram uncoherent_bs(const GridDiagram& g, Axis axis, int i) {
  if (classify_adjacent(g, axis, i) == IntervalRelation::SharedEndpoint) {
    throw GridError(ErrorCode::NotABandSite, "lines share a marking column");
  }
  GridDiagram out = on_axis(g, axis, [i](const GridDiagram& h) { return uncoherent_rows(h, i); });
  if (number_of_components(out) != number_of_components(g)) {
    throw GridError(ErrorCode::WrongBandClass, "band changes the component count");
  }
  return out;
}

GridDiagram stabilize(const GridDiagram& g, int row, Marking marking, Corner corner) {
  const int n = g.size();
  if (row < 0 || row >= n) throw GridError(ErrorCode::IndexOutOfRange, "row " + std::to_string(row));
  const int col = marking == Marking::X ? g.x(row) : g.o(row);
  // The empty square keeps the old row and column; the new line goes on the
  // opposite side of each.
  const bool empty_on_top = corner == Corner::NW || corner == Corner::NE;
  const bool empty_on_left = corner == Corner::NW || corner == Corner::SW;
  const int new_row = empty_on_top ? row : row + 1;
  const int new_col = empty_on_left ? col + 1 : col;
  auto map_row = [&](int r) { return r >= new_row ? r + 1 : r; };
  auto map_col = [&](int c) { return c >= new_col ? c + 1 : c; };

  std::vector<int> xs(n + 1), os(n + 1);
  for (int r = 0; r < n; ++r) {
    xs[map_row(r)] = map_col(g.x(r));
    os[map_row(r)] = map_col(g.o(r));
  }
  const int old_row = map_row(row);
  const int old_col = map_col(col);
  auto& same = marking == Marking::X ? xs : os;
  auto& other = marking == Marking::X ? os : xs;
  same[old_row] = new_col;
  same[new_row] = old_col;
  other[new_row] = new_col;
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

GridDiagram destabilize(const GridDiagram& g, int row, int col) {
  const int n = g.size();
  if (n <= 2) throw GridError(ErrorCode::TooSmall, "cannot destabilize a 2x2 grid");
  if (row < 0 || col < 0 || row > n - 2 || col > n - 2) {
    throw GridError(ErrorCode::IndexOutOfRange, "block at " + std::to_string(row) + "," + std::to_string(col));
  }
  int marks = 0, empty_row = -1, empty_col = -1;
  for (int r : {row, row + 1}) {
    for (int c : {col, col + 1}) {
      if (g.has_x(r, c) || g.has_o(r, c)) {
        ++marks;
      } else {
        empty_row = r;
        empty_col = c;
      }
    }
  }
  if (marks != 3) throw GridError(ErrorCode::NotDestabilizable, "block does not hold exactly three markings");
  const int drop_row = empty_row == row ? row + 1 : row;
  const int drop_col = empty_col == col ? col + 1 : col;
  auto map_col = [drop_col](int c) { return c > drop_col ? c - 1 : c; };
  std::vector<int> xs, os;
  for (int r = 0; r < n; ++r) {
    if (r == drop_row) continue;
    int x = g.x(r), o = g.o(r);
    if (r == empty_row) (x == drop_col ? x : o) = empty_col;
    xs.push_back(map_col(x));
    os.push_back(map_col(o));
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

GridDiagram generalized_destabilize(const GridDiagram& g, Axis axis, int index) {
  return on_axis(g, axis, [index](const GridDiagram& h) { return generalized_destabilize_rows(h, index); });
}

std::vector<GeneralizedDestabilization> destabilization_sites(const GridDiagram& g) {
  std::vector<GeneralizedDestabilization> sites;
  if (g.size() <= 2) return sites;
  for (Axis axis : {Axis::Rows, Axis::Columns}) {
    for (int i = 0; i < g.size(); ++i) {
      if (is_length_one(g, axis, i) && !is_trivial_site(g, axis, i)) sites.push_back({axis, i});
    }
  }
  return sites;
}

GridDiagram apply_move(const GridDiagram& g, const Move& move) {
  return std::visit(
      [&g](const auto& m) -> GridDiagram {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CyclicShift>) return cyclic_shift(g, m.axis, m.dir);
        if constexpr (std::is_same_v<T, Commutation>) return commute(g, m.axis, m.index);
        if constexpr (std::is_same_v<T, CrossingChange>) return crossing_change(g, m.axis, m.index);
        if constexpr (std::is_same_v<T, BandMove>) {
          return m.band == BandClass::Coherent ? coherent_bs(g, m.axis, m.index) : uncoherent_bs(g, m.axis, m.index);
        }
        if constexpr (std::is_same_v<T, Stabilization>) return stabilize(g, m.row, m.marking, m.corner);
        if constexpr (std::is_same_v<T, Destabilization>) return destabilize(g, m.row, m.col);
        if constexpr (std::is_same_v<T, GeneralizedDestabilization>) {
          return generalized_destabilize(g, m.axis, m.index);
        }
      },
      move);
}

std::vector<Move> legal_moves(const GridDiagram& g, MoveOptions options) {
  const int n = g.size();
  std::vector<Move> moves;
  for (Axis axis : {Axis::Rows, Axis::Columns}) {
    moves.push_back(CyclicShift{axis, 1});
    moves.push_back(CyclicShift{axis, -1});
  }
  for (Axis axis : {Axis::Rows, Axis::Columns}) {
    const GridDiagram& h = axis == Axis::Rows ? g : transpose(g);
    for (int i = 0; i + 1 < n; ++i) {
      const IntervalRelation rel = classify_rows(h, i);
      if (rel == IntervalRelation::Disjoint || rel == IntervalRelation::Nested) moves.push_back(Commutation{axis, i});
    }
  }
  for (int r = 0; r < n; ++r) {
    for (Marking m : {Marking::X, Marking::O}) {
      for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) moves.push_back(Stabilization{r, m, c});
    }
  }
  if (n > 2) {
    for (int r = 0; r + 1 < n; ++r) {
      for (int c = 0; c + 1 < n; ++c) {
        const int marks = g.has_x(r, c) + g.has_o(r, c) + g.has_x(r, c + 1) + g.has_o(r, c + 1) +
                          g.has_x(r + 1, c) + g.has_o(r + 1, c) + g.has_x(r + 1, c + 1) + g.has_o(r + 1, c + 1);
        if (marks == 3) moves.push_back(Destabilization{r, c});
      }
    }
  }
  for (const auto& site : destabilization_sites(g)) moves.push_back(site);

  if (options.include_link_changing) {
    for (Axis axis : {Axis::Rows, Axis::Columns}) {
      for (int i = 0; i + 1 < n; ++i) {
        if (classify_adjacent(g, axis, i) == IntervalRelation::Interleaved) moves.push_back(CrossingChange{axis, i});
      }
    }
    for (BandClass band : {BandClass::Coherent, BandClass::Uncoherent}) {
      for (Axis axis : {Axis::Rows, Axis::Columns}) {
        for (int i = 0; i + 1 < n; ++i) {
          if (classify_adjacent(g, axis, i) == IntervalRelation::SharedEndpoint) continue;
          try {
            apply_move(g, BandMove{axis, i, band});
            moves.push_back(BandMove{axis, i, band});
          } catch (const GridError&) {
          }
        }
      }
    }
  }
  return moves;
}

std::vector<std::pair<Move, GridDiagram>> perform_all_moves(const GridDiagram& g, MoveOptions options) {
  std::vector<std::pair<Move, GridDiagram>> out;
  for (const Move& m : legal_moves(g, options)) out.emplace_back(m, apply_move(g, m));
  return out;
}

std::string_view to_string(IntervalRelation r) {
  switch (r) {
    case IntervalRelation::Disjoint: return "disjoint";
    case IntervalRelation::Nested: return "nested";
    case IntervalRelation::Interleaved: return "interleaved";
    case IntervalRelation::SharedEndpoint: return "shared-endpoint";
  }
  return "";
}

std::string_view to_string(Corner c) {
  switch (c) {
    case Corner::NW: return "NW";
    case Corner::NE: return "NE";
    case Corner::SW: return "SW";
    case Corner::SE: return "SE";
  }
  return "";
}

std::string_view to_string(Axis a) { return a == Axis::Rows ? "rows" : "columns"; }

namespace {

Axis axis_from(const nlohmann::json& j) {
  const auto s = j.at("axis").get<std::string>();
  if (s == "rows") return Axis::Rows;
  if (s == "columns") return Axis::Columns;
  throw GridError(ErrorCode::ParseError, "bad axis " + s);
}

Corner corner_from(const std::string& s) {
  for (Corner c : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
    if (to_string(c) == s) return c;
  }
  throw GridError(ErrorCode::ParseError, "bad corner " + s);
}

}  // namespace

std::string to_json(const Move& move) {
  nlohmann::ordered_json j;
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, CyclicShift>) {
          j["kind"] = "CyclicShift";
          j["axis"] = to_string(m.axis);
          j["dir"] = m.dir;
        } else if constexpr (std::is_same_v<T, Commutation> || std::is_same_v<T, CrossingChange> ||
                             std::is_same_v<T, GeneralizedDestabilization>) {
          j["kind"] = std::is_same_v<T, Commutation>      ? "Commutation"
                      : std::is_same_v<T, CrossingChange> ? "CrossingChange"
                                                          : "GeneralizedDestabilization";
          j["axis"] = to_string(m.axis);
          j["index"] = m.index;
        } else if constexpr (std::is_same_v<T, BandMove>) {
          j["kind"] = "BandMove";
          j["axis"] = to_string(m.axis);
          j["index"] = m.index;
          j["class"] = m.band == BandClass::Coherent ? "coherent" : "uncoherent";
        } else if constexpr (std::is_same_v<T, Stabilization>) {
          j["kind"] = "Stabilization";
          j["row"] = m.row;
          j["marking"] = m.marking == Marking::X ? "X" : "O";
          j["corner"] = to_string(m.corner);
        } else {
          j["kind"] = "Destabilization";
          j["row"] = m.row;
          j["col"] = m.col;
        }
      },
      move);
  return j.dump();
}

Move move_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "CyclicShift") return CyclicShift{axis_from(j), j.at("dir").get<int>()};
    if (kind == "Commutation") return Commutation{axis_from(j), j.at("index").get<int>()};
    if (kind == "CrossingChange") return CrossingChange{axis_from(j), j.at("index").get<int>()};
    if (kind == "GeneralizedDestabilization") return GeneralizedDestabilization{axis_from(j), j.at("index").get<int>()};
    if (kind == "BandMove") {
      const auto cls = j.at("class").get<std::string>();
      if (cls != "coherent" && cls != "uncoherent") throw GridError(ErrorCode::ParseError, "bad band class " + cls);
      return BandMove{axis_from(j), j.at("index").get<int>(),
                      cls == "coherent" ? BandClass::Coherent : BandClass::Uncoherent};
    }
    if (kind == "Stabilization") {
      const auto mk = j.at("marking").get<std::string>();
      if (mk != "X" && mk != "O") throw GridError(ErrorCode::ParseError, "bad marking " + mk);
      return Stabilization{j.at("row").get<int>(), mk == "X" ? Marking::X : Marking::O,
                           corner_from(j.at("corner").get<std::string>())};
    }
    if (kind == "Destabilization") return Destabilization{j.at("row").get<int>(), j.at("col").get<int>()};
    throw GridError(ErrorCode::ParseError, "unknown move kind " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw GridError(ErrorCode::ParseError, e.what());
  }
}

}  // namespace gridkit
