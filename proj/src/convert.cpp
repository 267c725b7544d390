#include "gridkit/convert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "gridkit/invariants.hpp"
#include "gridkit/simplify.hpp"

namespace gridkit {

namespace {

void write_list(std::ostringstream& out, const std::vector<int>& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << ']';
}

}  // namespace

BraidWord convert_to_braid(const GridDiagram& input, bool simplify_first) {
  const GridDiagram g = simplify_first ? simplify_grid(input, EffortSpec{}) : input;
  const int n = g.size();
  // Occupied columns just below the current row, kept sorted.  Below row 0
  // these are exactly the columns that run downwards.
  std::vector<int> occupied;
  for (int c = 0; c < n; ++c) {
    if (g.row_of_o(c) < g.row_of_x(c)) occupied.push_back(c);
  }
  BraidWord w{{}, static_cast<int>(occupied.size())};
  for (int r = 0; r < n; ++r) {
    const int from = g.o(r), to = g.x(r);
    const auto it = std::lower_bound(occupied.begin(), occupied.end(), from);
    int p = static_cast<int>(it - occupied.begin());
    occupied.erase(it);
    const auto dest = std::lower_bound(occupied.begin(), occupied.end(), to);
    const int q = static_cast<int>(dest - occupied.begin());
    occupied.insert(dest, to);
    // Moving right the strand passes under its right neighbour (negative
    // letter); moving left, under its left neighbour (positive letter).
    for (; p < q; ++p) w.letters.push_back(-(p + 1));
    for (; p > q; --p) w.letters.push_back(p);
  }
  return w;
}

int count_crossings_braid(const BraidWord& w) { return static_cast<int>(w.letters.size()); }

int closure_components(const BraidWord& w) {
  std::vector<int> at(w.strands);
  std::iota(at.begin(), at.end(), 0);
  for (int letter : w.letters) {
    const int i = std::abs(letter);
    std::swap(at[i - 1], at[i]);
  }
  std::vector<bool> seen(w.strands, false);
  int cycles = 0;
  for (int s = 0; s < w.strands; ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int k = s; !seen[k]; k = at[k]) seen[k] = true;
  }
  return cycles;
}

GaussCode gauss_code(const GridDiagram& g) {
  const int n = g.size();
  std::map<std::pair<int, int>, int> sign_at;
  for (const Crossing& c : crossings(g)) sign_at[{c.row, c.col}] = c.sign;
  std::map<std::pair<int, int>, int> label;
  GaussCode code;
  auto visit = [&](std::vector<int>& seq, int row, int col, bool over) {
    const auto key = std::make_pair(row, col);
    const auto s = sign_at.find(key);
    if (s == sign_at.end()) return;
    auto [it, fresh] = label.emplace(key, static_cast<int>(label.size()) + 1);
    if (fresh) code.signs.push_back(s->second);
    seq.push_back(over ? it->second : -it->second);
  };
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> seq;
    int r = start;
    while (!seen[r]) {
      seen[r] = true;
      const int o = g.o(r), x = g.x(r);
      const int dc = x > o ? 1 : -1;
      for (int c = o + dc; c != x; c += dc) visit(seq, r, c, false);
      const int next = g.row_of_o(x);
      const int dr = next > r ? 1 : -1;
      for (int q = r + dr; q != next; q += dr) visit(seq, q, x, true);
      r = next;
    }
    code.components.push_back(std::move(seq));
  }
  return code;
}

std::string to_string(const BraidWord& w) {
  std::ostringstream out;
  write_list(out, w.letters);
  return out.str();
}

std::string to_string(const GaussCode& code) {
  std::ostringstream out;
  out << "[[";
  for (std::size_t i = 0; i < code.components.size(); ++i) {
    if (i) out << ", ";
    write_list(out, code.components[i]);
  }
  out << "], ";
  write_list(out, code.signs);
  out << ']';
  return out.str();
}

}  // namespace gridkit
