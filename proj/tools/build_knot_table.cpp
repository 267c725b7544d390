// Regenerates resources/knots.jsonl and resources/legendrian.jsonl.
//
//   build_knot_table <resources-dir>
//
// Rational knots are drawn as 4-plats from their Conway notation, the rest
// as braid closures.  Each drawing is simplified and rejected unless its
// determinant matches the table.
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "../tests/oracles.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/simplify.hpp"
#include "gridkit/transforms.hpp"
#include "json.hpp"

using namespace gridkit;

namespace {

struct Source {
  std::string name;
  std::vector<int> conway;  // empty for braid sources
  std::vector<int> braid;
  int strands = 0;
  std::int64_t det;
};

std::vector<int> plat_word(std::vector<int> a) {
  if (a.size() % 2 == 0) {
    a.back() -= 1;
    a.push_back(1);
  }
  std::vector<int> word;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (int k = 0; k < a[i]; ++k) word.push_back(i % 2 == 0 ? 2 : -1);
  }
  return word;
}

const std::vector<Source> kSources = {
    {"3_1", {3}, {}, 0, 3},
    {"4_1", {2, 2}, {}, 0, 5},
    {"5_1", {5}, {}, 0, 5},
    {"5_2", {3, 2}, {}, 0, 7},
    {"6_1", {4, 2}, {}, 0, 9},
    {"6_2", {3, 1, 2}, {}, 0, 11},
    {"6_3", {2, 1, 1, 2}, {}, 0, 13},
    {"7_1", {7}, {}, 0, 7},
    {"7_2", {5, 2}, {}, 0, 11},
    {"7_3", {4, 3}, {}, 0, 13},
    {"7_4", {3, 1, 3}, {}, 0, 15},
    {"7_5", {3, 2, 2}, {}, 0, 17},
    {"7_6", {2, 2, 1, 2}, {}, 0, 19},
    {"7_7", {2, 1, 1, 1, 2}, {}, 0, 21},
    {"8_1", {6, 2}, {}, 0, 13},
    {"8_2", {5, 1, 2}, {}, 0, 17},
    {"8_3", {4, 4}, {}, 0, 17},
    {"8_4", {4, 1, 3}, {}, 0, 19},
    {"8_5", {}, {1, 1, 1, -2, 1, 1, 1, -2}, 3, 21},
    {"8_6", {3, 3, 2}, {}, 0, 23},
    {"8_7", {4, 1, 1, 2}, {}, 0, 23},
    {"8_8", {2, 3, 1, 2}, {}, 0, 25},
    {"8_9", {3, 1, 1, 3}, {}, 0, 25},
    {"8_10", {}, {1, 1, 1, -2, 1, 1, -2, -2}, 3, 27},
    {"8_11", {3, 2, 1, 2}, {}, 0, 27},
    {"8_12", {2, 2, 2, 2}, {}, 0, 29},
    {"8_13", {3, 1, 1, 1, 2}, {}, 0, 29},
    {"8_14", {2, 2, 1, 1, 2}, {}, 0, 31},
    {"8_15", {}, {1, 3, 3, -2, 3, 1, 2, 2, 1}, 4, 33},
    {"8_16", {}, {1, 1, -2, 1, 1, -2, 1, -2}, 3, 35},
    {"8_17", {}, {1, 1, -2, 1, -2, 1, -2, -2}, 3, 37},
    {"8_18", {}, {1, -2, 1, -2, 1, -2, 1, -2}, 3, 45},
    {"8_19", {}, {1, 1, 1, 2, 1, 1, 1, 2}, 3, 3},
    {"8_20", {}, {1, 1, 1, -2, -1, -1, -1, -2}, 3, 9},
    {"8_21", {}, {1, 1, 1, 2, -1, -1, 2, 2}, 3, 15},
};

GridDiagram smallest(const GridDiagram& g, int tries) {
  GridDiagram best = simplify_grid(g, {40, 0, 1});
  for (int s = 2; s < tries; ++s) {
    GridDiagram h = simplify_grid(scramble_grid(best, 10, MoveMode::Topological, s), {40, 0, std::uint64_t(s)});
    if (h.size() < best.size()) best = h;
  }
  return best;
}

std::string legendrian_line(const std::string& name, const GridDiagram& g) {
  nlohmann::json j = nlohmann::json::parse(encode(g));
  j["name"] = name;
  j["tb"] = thurston_bennequin(g);
  j["rot"] = rotation_number(g);
  return j.dump();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: build_knot_table <resources-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::ofstream knots(dir + "/knots.jsonl");
  std::map<std::string, GridDiagram> built;
  bool ok = true;
  for (const Source& src : kSources) {
    const GridDiagram raw = src.conway.empty() ? braid_closure_grid(src.braid, src.strands)
                                               : plat_closure_grid(plat_word(src.conway), 4);
    // Alternating knots have arc index c + 2; the three non-alternating ones
    // have 7, 8 and 8.
    const int crossings = std::stoi(src.name.substr(0, src.name.find('_')));
    const int arc_index = src.name == "8_19" ? 7 : (src.name == "8_20" || src.name == "8_21") ? 8 : crossings + 2;
    GridDiagram g = smallest(raw, 30);
    for (int extra = 1; g.size() > arc_index && extra <= 20; ++extra) {
      GridDiagram h = smallest(scramble_grid(g, 20, MoveMode::Topological, 1000 + extra), 30);
      if (h.size() < g.size()) g = h;
    }
    // Fix chirality so that tb of the stored grid is the larger of the pair.
    if (thurston_bennequin(g) < thurston_bennequin(rotate(g))) g = rotate(g);
    const auto det = oracle::determinant(g);
    const int comps = number_of_components(g);
    std::cerr << src.name << " n=" << g.size() << " det=" << det << " comps=" << comps << "\n";
    if (det != src.det || comps != 1 || g.size() != arc_index) {
      std::cerr << "  REJECTED (expected det " << src.det << ", grid number " << arc_index << ")\n";
      ok = false;
      continue;
    }
    g = g.with_name(src.name);
    built.emplace(src.name, g);
    knots << encode(g) << "\n";
  }

  std::ofstream leg(dir + "/legendrian.jsonl");
  std::set<std::string> seen;
  auto emit = [&](const std::string& name, const GridDiagram& g) {
    const std::string key = name + "/" + std::to_string(thurston_bennequin(g)) + "/" + std::to_string(rotation_number(g));
    if (!seen.insert(key).second) return;
    leg << legendrian_line(name, g.with_name(std::nullopt)) << "\n";
  };
  emit("0_1", generate_unknot(2));
  for (const std::string name : {"3_1", "4_1", "5_1", "5_2"}) {
    const GridDiagram& g = built.at(name);
    emit(name, g);
    emit(name, invert_orientation(g));
    const std::string mirror = name == "4_1" ? name : "m(" + name + ")";
    emit(mirror, rotate(g));
    emit(mirror, invert_orientation(rotate(g)));
  }
  return ok ? 0 : 1;
}
