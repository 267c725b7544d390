#include "gridkit/invariants.hpp"

#include <algorithm>

namespace gridkit {

std::vector<int> row_components(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    // Row i continues, through the vertical segment of column x(i), to the
    // row holding that column's O marking.
    for (int r = start; comp[r] == -1; r = g.row_of_o(g.x(r))) comp[r] = next;
    ++next;
  }
  return comp;
}

int number_of_components(const GridDiagram& g) {
  const auto comp = row_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

std::vector<Crossing> crossings(const GridDiagram& g) {
  const int n = g.size();
  std::vector<Crossing> out;
  for (int r = 0; r < n; ++r) {
    const int lo = std::min(g.x(r), g.o(r));
    const int hi = std::max(g.x(r), g.o(r));
    const int h = g.x(r) > g.o(r) ? 1 : -1;
    for (int c = lo + 1; c < hi; ++c) {
      const int top = std::max(g.row_of_x(c), g.row_of_o(c));
      const int bottom = std::min(g.row_of_x(c), g.row_of_o(c));
      if (bottom < r && r < top) {
        const int v = g.row_of_o(c) > g.row_of_x(c) ? 1 : -1;
        out.push_back({r, c, -h * v});
      }
    }
  }
  return out;
}

int writhe(const GridDiagram& g) {
  int w = 0;
  for (const auto& c : crossings(g)) w += c.sign;
  return w;
}

int crossing_number(const GridDiagram& g) { return static_cast<int>(crossings(g).size()); }

int grid_length(const GridDiagram& g) {
  int total = 0;
  for (const auto& s : segments(g)) total += s.length();
  return total;
}

CornerShape corner_shape(const GridDiagram& g, int row, Marking marking) {
  const int col = marking == Marking::X ? g.x(row) : g.o(row);
  const int other_col = marking == Marking::X ? g.o(row) : g.x(row);
  const int other_row = marking == Marking::X ? g.row_of_o(col) : g.row_of_x(col);
  const bool runs_right = other_col > col;
  const bool runs_up = other_row > row;
  if (runs_right) return runs_up ? CornerShape::SouthWest : CornerShape::NorthWest;
  return runs_up ? CornerShape::SouthEast : CornerShape::NorthEast;
}

bool is_cusp(CornerShape shape) { return shape == CornerShape::NorthWest || shape == CornerShape::SouthEast; }

CuspCount cusps(const GridDiagram& g) {
  CuspCount count;
  for (int r = 0; r < g.size(); ++r) {
    for (Marking m : {Marking::X, Marking::O}) {
      const CornerShape shape = corner_shape(g, r, m);
      if (!is_cusp(shape)) continue;
      // Traversal arrives at an X along its row and at an O along its column.
      // In the front, height grows with row + column, so the travel direction
      // through the cusp is fixed by shape and marking.
      const bool descending = (shape == CornerShape::NorthWest) == (m == Marking::X);
      (descending ? count.descending : count.ascending) += 1;
    }
  }
  return count;
}

int ascending_cusps(const GridDiagram& g) { return cusps(g).ascending; }
int descending_cusps(const GridDiagram& g) { return cusps(g).descending; }

int thurston_bennequin(const GridDiagram& g) { return writhe(g) - cusps(g).total() / 2; }

int rotation_number(const GridDiagram& g) {
  const CuspCount c = cusps(g);
  return (c.descending - c.ascending) / 2;
}

int self_linking(const GridDiagram& g) { return thurston_bennequin(g) - rotation_number(g); }

}  // namespace gridkit
