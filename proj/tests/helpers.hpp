#pragma once

#include <cstdint>
#include <vector>

#include "gridkit/generators.hpp"
#include "gridkit/rng.hpp"

namespace testing {

/// Random grids with grid number in [lo, hi], fixed by `seed`.
inline std::vector<gridkit::GridDiagram> random_grids(int count, int lo, int hi, std::uint64_t seed) {
  gridkit::Rng rng(seed);
  std::vector<gridkit::GridDiagram> out;
  for (int i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(rng.below(hi - lo + 1));
    out.push_back(gridkit::generate_random_grid({.n = n, .components = std::nullopt, .seed = rng.next()}));
  }
  return out;
}

inline std::vector<gridkit::GridDiagram> random_knots(int count, int lo, int hi, std::uint64_t seed) {
  gridkit::Rng rng(seed);
  std::vector<gridkit::GridDiagram> out;
  for (int i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(rng.below(hi - lo + 1));
    out.push_back(gridkit::generate_random_grid({.n = n, .components = 1, .seed = rng.next()}));
  }
  return out;
}

}  // namespace testing
