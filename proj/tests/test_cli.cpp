#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gridkit/cli.hpp"
#include "gridkit/convert.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/render.hpp"
#include "gridkit/simplify.hpp"
#include "gridkit/stats.hpp"
#include "gridkit/transforms.hpp"

using namespace gridkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

const std::filesystem::path kGolden = GRIDKIT_GOLDEN_DIR;

}  // namespace

TEST_CASE("help grammar is frozen") {
  std::string all = run({"--help"}).out;
  for (const char* c : {"generate", "load", "simplify", "scramble", "moves", "invariants", "transform", "convert",
                        "draw", "stats"}) {
    const Run r = run({c, "--help"});
    CHECK(r.code == 0);
    all += "\n" + r.out;
  }
  CHECK(all == slurp(kGolden / "help.txt"));
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"generate", "--random", "-n", "x"}).code == 2);
  CHECK(run({"simplify", "--mode", "smooth"}, "{\"x\":[1,0],\"o\":[0,1]}").code == 2);
  const Run unknown = run({"load", "nope"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("UnknownName") != std::string::npos);
  const Run bad = run({"invariants"}, "{\"x\":[0,1],\"o\":[0,1]}");
  CHECK(bad.code == 1);
  CHECK(bad.err.find("Collision") != std::string::npos);
  CHECK(run({"invariants"}, "not json").code == 1);
  CHECK(run({"generate", "--random", "-n", "1"}).code == 1);
  CHECK(run({"load", "3_1"}).code == 0);
}

TEST_CASE("generate matches the library") {
  const Run r = run({"generate", "--random", "-n", "20", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == encode(generate_random_grid({.n = 20, .components = std::nullopt, .seed = 7})) + "\n");
  CHECK(r.err == "# seed 7\n");
  CHECK(run({"generate", "--random", "-n", "20", "--seed", "7"}).out == r.out);

  const Run list = run({"generate", "--random", "-n", "8", "--count", "4", "--seed", "3"});
  CHECK(list.out == encode_lines(generate_grid_list(8, 4, 3)));
  CHECK(run({"generate", "--unknot", "5"}).out == encode(generate_unknot(5)) + "\n");
  CHECK(run({"generate", "--torus", "2", "3"}).out == encode(generate_torus_link(2, 3)) + "\n");
  CHECK(run({"generate", "--twist", "3", "--clasp", "-"}).out == encode(generate_twist_knot(3, -1)) + "\n");
}

TEST_CASE("pipeline subcommands match the library") {
  const GridDiagram k = load_knot("5_2");
  const std::string in = run({"load", "5_2"}).out;
  CHECK(in == encode(k) + "\n");

  CHECK(run({"simplify", "--seed", "4"}, in).out == encode(simplify_grid(k, parse_effort("default", 4))) + "\n");
  CHECK(run({"scramble", "--steps", "12", "--seed", "4"}, in).out ==
        encode(scramble_grid(k, 12, MoveMode::Topological, 4)) + "\n");
  CHECK(run({"convert", "--to", "braid"}, in).out == to_string(convert_to_braid(k)) + "\n");
  CHECK(run({"convert", "--to", "gauss"}, in).out == to_string(gauss_code(k)) + "\n");
  CHECK(run({"draw"}, in).out == draw_ascii(k));
  CHECK(run({"draw", "--format", "svg", "--cell", "10"}, in).out == draw_svg(k, 10));
  CHECK(run({"transform", "--op", "mirror"}, in).out == encode(mirror_grid(k).with_name(std::nullopt)) + "\n");
  CHECK(run({"transform", "--op", "parallel", "--copies", "2"}, in).out ==
        encode(parallel_copies(k, 2).with_name(std::nullopt)) + "\n");

  std::string moves;
  for (const Move& m : permitted_moves(k, MoveMode::Legendrian)) moves += to_json(m) + "\n";
  CHECK(run({"moves", "--mode", "legendrian"}, in).out == moves);

  const Run inv = run({"invariants"}, in);
  CHECK(inv.out.find("\"tb\":" + std::to_string(thurston_bennequin(k))) != std::string::npos);
  CHECK(inv.out.find("\"crossings\":" + std::to_string(crossing_number(k))) != std::string::npos);
}

TEST_CASE("draw golden") {
  CHECK(run({"draw"}, run({"load", "3_1"}).out).out == slurp(kGolden / "trefoil_ascii.txt"));
  CHECK(run({"draw"}, "{\"x\":[1,0],\"o\":[0,1]}").out == "XO\nOX\n");
}

TEST_CASE("connected sum through files") {
  const auto dir = std::filesystem::temp_directory_path() / "gridkit_cli_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.json") << encode(load_knot("3_1")) << "\n";
    std::ofstream(dir / "b.json") << encode(load_knot("4_1")) << "\n";
  }
  const Run r = run({"transform", (dir / "a.json").string(), "--op", "sum", "--with", (dir / "b.json").string()});
  CHECK(r.code == 0);
  CHECK(r.out == encode(connected_sum(load_knot("3_1"), load_knot("4_1")).with_name(std::nullopt)) + "\n");
  CHECK(run({"transform", (dir / "a.json").string(), "--op", "sum"}).code == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("legendrian round trip") {
  const std::string unknot = "{\"x\":[1,0],\"o\":[0,1]}";
  const Run big = run({"scramble", "--mode", "legendrian", "--steps", "30", "--seed", "9"}, unknot);
  const GridDiagram g = decode(big.out.substr(0, big.out.find('\n')));
  CHECK(g.size() > 2);
  const Run small = run({"simplify", "--mode", "legendrian", "--seed", "9"}, big.out);
  const GridDiagram h = decode(small.out.substr(0, small.out.find('\n')));
  CHECK(h.size() < g.size());
  CHECK(thurston_bennequin(h) == -1);
  CHECK(rotation_number(h) == 0);
}

TEST_CASE("stats through the cli") {
  const std::vector<std::string> args{"stats", "--n-min", "4", "--n-max", "8", "--step", "2", "--samples", "5",
                                      "--seed", "1"};
  const Run r = run(args);
  CHECK(r.code == 0);
  CHECK(r.out == to_csv(run_experiment({.n_min = 4, .n_max = 8, .step = 2, .samples = 5, .seed = 1})));
  CHECK(run(args).out == r.out);
  const auto csv = std::filesystem::temp_directory_path() / "gridkit_cli_stats.csv";
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", csv.string()});
  CHECK(run(with_out).out.empty());
  CHECK(slurp(csv) == r.out);
  std::filesystem::remove(csv);
}
