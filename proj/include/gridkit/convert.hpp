#pragma once

#include <string>
#include <vector>

#include "gridkit/grid.hpp"

namespace gridkit {

struct BraidWord {
  std::vector<int> letters;  // +-i stands for sigma_i^{+-1}
  int strands = 1;
  bool operator==(const BraidWord&) const = default;
};

/// Every downward column is replaced by its complement on the torus, so all
/// vertical strands point up; reading rows bottom to top, the horizontal
/// segment of row i slides one strand under its neighbours, one letter per
/// neighbour.  With simplify_first the grid is first run through
/// simplify_grid at default effort (seed 0).
BraidWord convert_to_braid(const GridDiagram& g, bool simplify_first = false);

int count_crossings_braid(const BraidWord& w);

/// Number of cycles of the permutation underlying the word.
int closure_components(const BraidWord& w);

struct GaussCode {
  std::vector<std::vector<int>> components;
  std::vector<int> signs;  // signs[k - 1] is the sign of crossing k
  bool operator==(const GaussCode&) const = default;
};

/// Components are ordered by their lowest row and each is read from the O
/// in that row, along the row first.  Crossings are numbered in order of
/// first visit; +k on the overstrand (vertical), -k on the understrand.
GaussCode gauss_code(const GridDiagram& g);

/// "[1, -2, 1]"
std::string to_string(const BraidWord& w);
/// "[[[1, -2, 3, -1, 2, -3]], [1, 1, 1]]"
std::string to_string(const GaussCode& code);

}  // namespace gridkit
