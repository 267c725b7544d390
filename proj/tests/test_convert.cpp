#include <map>
#include <numeric>

#include "doctest.h"
#include "gridkit/convert.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/rng.hpp"
#include "gridkit/simplify.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gridkit;

namespace {

const GridDiagram kUnknot({1, 0}, {0, 1});

int exponent_sum(const std::vector<int>& w) {
  int s = 0;
  for (int l : w) s += l > 0 ? 1 : -1;
  return s;
}

}  // namespace

TEST_CASE("braid words of small grids") {
  const BraidWord u = convert_to_braid(kUnknot);
  CHECK(u.letters.empty());
  CHECK(u.strands == 1);
  CHECK(to_string(u) == "[]");
  CHECK(count_crossings_braid(u) == 0);
  CHECK(closure_components(u) == 1);
  CHECK(closure_components({{1, 1}, 2}) == 2);
  CHECK(closure_components({{}, 4}) == 4);
  CHECK(closure_components({{1, 2, 3}, 4}) == 1);
  CHECK(count_crossings_braid({{1, -2, 1, -2}, 3}) == 4);
  CHECK(to_string(BraidWord{{1, -2, 1}, 3}) == "[1, -2, 1]");
}

TEST_CASE("reference braid closures") {
  const GridDiagram t = braid_closure_grid(std::vector<int>{1, 1, 1}, 2);
  CHECK(oracle::determinant(t) == 3);
  CHECK(simplify_grid(t, {}).size() == 5);
  const GridDiagram f = braid_closure_grid(std::vector<int>{1, -2, 1, -2}, 3);
  CHECK(oracle::components(f) == 1);
  CHECK(oracle::determinant(f) == 5);
  CHECK(oracle::writhe(f) == 0);
}

TEST_CASE("braid closures carry the exponent sum as writhe") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int strands = 2 + int(rng.below(4));
    std::vector<int> word(rng.below(12));
    for (int& l : word) l = (1 + int(rng.below(strands - 1))) * (rng.below(2) ? 1 : -1);
    const GridDiagram g = braid_closure_grid(word, strands);
    CHECK(oracle::writhe(g) == exponent_sum(word));
    CHECK(oracle::crossings(g).size() == word.size());
    CHECK(oracle::components(g) == closure_components({word, strands}));
  }
}

TEST_CASE("conversion keeps the link") {
  for (const GridDiagram& g : testing::random_grids(1000, 2, 12, 21)) {
    const BraidWord w = convert_to_braid(g);
    CHECK(closure_components(w) == oracle::components(g));
    CHECK(count_crossings_braid(w) == int(w.letters.size()));
    for (int l : w.letters) {
      CHECK(l != 0);
      CHECK(std::abs(l) < w.strands);
    }
  }
  for (const GridDiagram& g : testing::random_knots(200, 3, 11, 22)) {
    const BraidWord w = convert_to_braid(g);
    CHECK(oracle::determinant(braid_closure_grid(w.letters, w.strands)) == oracle::determinant(g));
  }
  for (const auto& name : available_knots()) {
    INFO(name);
    const GridDiagram g = load_knot(name);
    const BraidWord w = convert_to_braid(g);
    CHECK(oracle::determinant(braid_closure_grid(w.letters, w.strands)) == oracle::determinant(g));
  }
}

TEST_CASE("simplify_first") {
  for (const GridDiagram& g : testing::random_grids(60, 4, 12, 23)) {
    const BraidWord w = convert_to_braid(g, true);
    CHECK(closure_components(w) == oracle::components(g));
    CHECK(w == convert_to_braid(simplify_grid(g, {}), false));
  }
  CHECK(convert_to_braid(generate_unknot(9), true) == BraidWord{{}, 1});
}

TEST_CASE("gauss codes") {
  const GaussCode u = gauss_code(kUnknot);
  CHECK(to_string(u) == "[[[]], []]");
  CHECK(gauss_code(generate_unlink(3)).components.size() == 3);
  for (const GridDiagram& g : testing::random_grids(1000, 2, 14, 24)) {
    const GaussCode c = gauss_code(g);
    CHECK(int(c.components.size()) == oracle::components(g));
    CHECK(int(c.signs.size()) == crossing_number(g));
    CHECK(std::accumulate(c.signs.begin(), c.signs.end(), 0) == oracle::writhe(g));
    std::map<int, int> seen;
    int next = 1;
    for (const auto& comp : c.components) {
      for (int label : comp) {
        REQUIRE(label != 0);
        CHECK(std::abs(label) <= int(c.signs.size()));
        if (!seen.count(-label) && !seen.count(label)) CHECK(std::abs(label) == next++);
        CHECK(seen.count(label) == 0);
        ++seen[label];
      }
    }
    for (std::size_t k = 1; k <= c.signs.size(); ++k) {
      CHECK(seen.count(int(k)) == 1);
      CHECK(seen.count(-int(k)) == 1);
      CHECK(std::abs(c.signs[k - 1]) == 1);
    }
  }
  const GaussCode t = gauss_code(braid_closure_grid(std::vector<int>{1, 1, 1}, 2));
  CHECK(t.components.size() == 1);
  CHECK(t.components[0].size() == 6);
  CHECK(t.signs == std::vector<int>{1, 1, 1});
  const GaussCode s = gauss_code(load_knot("7_3"));
  CHECK(s.components.size() == 1);
  CHECK(int(s.signs.size()) == crossing_number(load_knot("7_3")));
}
