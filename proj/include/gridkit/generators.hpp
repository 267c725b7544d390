#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridkit/grid.hpp"

namespace gridkit {

struct RandomSpec {
  int n = 2;
  std::optional<int> components;
  std::uint64_t seed = 0;
  int max_tries = 1000000;
};

/// Uniform over collision-free pairs: both permutations are drawn by
/// Fisher-Yates and the pair is rejected on any collision (acceptance tends
/// to 1/e).  With `components` set, rejection continues until the count
/// matches, for at most max_tries accepted draws.
GridDiagram generate_random_grid(const RandomSpec& spec);

/// `count` grids; element i is generate_random_grid with seed
/// derive_seed(seed, i), so any element can be reproduced on its own.
std::vector<GridDiagram> generate_grid_list(int n, int count, std::uint64_t seed);

/// Staircase: xs[i] = (i + 1) mod n, os[i] = i.
GridDiagram generate_unknot(int n);
/// k diagonal copies of the 2x2 unknot.
GridDiagram generate_unlink(int k);

/// os[i] = i, xs[i] = (i + q) mod (p + q).  Has gcd(p, q) components; with
/// vertical overpasses every crossing is negative.
GridDiagram generate_torus_link(int p, int q);

/// Twist knot with k half twists closed by a clasp whose two crossings have
/// sign clasp_sign.  Built as a 4-plat, so the diagram has k + 2 crossings.
GridDiagram generate_twist_knot(int k, int clasp_sign);

/// Grid whose diagram is the closure of a braid word (letter +-i is
/// sigma_i^{+-1}, i in 1..strands-1), strands oriented upwards.
GridDiagram braid_closure_grid(std::span<const int> word, int strands);

/// Grid of the plat closure of a braid on an even number of strands: caps join
/// strands (1,2), (3,4), ... at the bottom and at the top.
GridDiagram plat_closure_grid(std::span<const int> word, int strands);

std::vector<std::string> available_knots();
/// Embedded knots 3_1 through 8_21.  Throws UnknownName.
GridDiagram load_knot(const std::string& name);

struct LegendrianEntry {
  std::string name;
  GridDiagram grid;
  int tb;
  int rot;
};

std::vector<LegendrianEntry> available_legendrian_knots();
/// Throws UnknownEntry when the (name, tb, rot) triple is not embedded.
GridDiagram load_legendrian_knot(const std::string& name, int tb, int rot);

}  // namespace gridkit
