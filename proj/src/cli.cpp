#include "gridkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gridkit/convert.hpp"
#include "gridkit/error.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/moves.hpp"
#include "gridkit/render.hpp"
#include "gridkit/rng.hpp"
#include "gridkit/simplify.hpp"
#include "gridkit/stats.hpp"
#include "gridkit/transforms.hpp"
#include "json.hpp"

namespace gridkit {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path);
  if (!file) throw GridError(ErrorCode::InvalidArgument, "cannot read " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

/// One grid per line, or a single (possibly multi-line) JSON document.
std::vector<GridDiagram> read_grids(const std::string& path, std::istream& in) {
  const std::string text = slurp(path, in);
  std::vector<GridDiagram> grids;
  try {
    grids = decode_lines(text);
  } catch (const GridError&) {
    grids = {decode(text)};
  }
  if (grids.empty()) throw GridError(ErrorCode::ParseError, "no grid in input");
  return grids;
}

GridDiagram read_one(const std::string& path, std::istream& in) {
  auto grids = read_grids(path, in);
  if (grids.size() != 1) throw GridError(ErrorCode::InvalidArgument, "expected exactly one grid");
  return grids.front();
}

std::string invariants_json(const GridDiagram& g) {
  nlohmann::ordered_json j;
  if (g.name()) j["name"] = *g.name();
  const CuspCount cc = cusps(g);
  j["grid_number"] = g.size();
  j["components"] = number_of_components(g);
  j["length"] = grid_length(g);
  j["crossings"] = crossing_number(g);
  j["writhe"] = writhe(g);
  j["tb"] = thurston_bennequin(g);
  j["rot"] = rotation_number(g);
  j["sl"] = self_linking(g);
  j["cusps"] = cc.total();
  j["ascending_cusps"] = cc.ascending;
  j["descending_cusps"] = cc.descending;
  return j.dump();
}

struct Options {
  std::string input;
  std::string input2;
  std::uint64_t seed = 0;
  // generate
  bool random = false;
  int n = 0;
  int components = 0;
  int count = 1;
  int unknot = 0;
  int unlink = 0;
  std::vector<int> torus;
  int twist = 0;
  std::string clasp = "-";
  // load
  std::string name;
  bool list = false;
  bool legendrian = false;
  int tb = 0;
  int rot = 0;
  // simplify / scramble / moves
  std::string effort = "default";
  std::string mode = "topological";
  int steps = 30;
  bool link_changing = false;
  std::string apply;
  // transform
  std::string op;
  int copies = 2;
  // convert / draw
  std::string to = "braid";
  bool simplify_first = false;
  std::string format = "ascii";
  int cell = 24;
  // stats
  ExperimentSpec stats;
  std::string out;
  std::string plot;
};

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed (reported on stderr as '# seed N')")->capture_default_str();
}

void add_input(CLI::App* cmd, std::string& target) {
  cmd->add_option("input", target, "Grid JSON/JSONL file; standard input when omitted or '-'");
}

int dispatch(CLI::App& app, Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto seed_note = [&] { err << "# seed " << o.seed << "\n"; };
  auto cmd = [&](const char* name) { return app.got_subcommand(name); };

  if (cmd("generate")) {
    std::vector<GridDiagram> grids;
    if (o.random) {
      seed_note();
      if (o.count == 1) {
        RandomSpec spec{o.n, std::nullopt, o.seed};
        if (o.components > 0) spec.components = o.components;
        grids.push_back(generate_random_grid(spec));
      } else {
        if (o.components > 0) throw GridError(ErrorCode::InvalidArgument, "--components needs --count 1");
        grids = generate_grid_list(o.n, o.count, o.seed);
      }
    } else if (o.unknot > 0) {
      grids.push_back(generate_unknot(o.unknot));
    } else if (o.unlink > 0) {
      grids.push_back(generate_unlink(o.unlink));
    } else if (!o.torus.empty()) {
      grids.push_back(generate_torus_link(o.torus[0], o.torus[1]));
    } else if (o.twist > 0) {
      if (o.clasp != "+" && o.clasp != "-") throw GridError(ErrorCode::InvalidArgument, "--clasp must be + or -");
      grids.push_back(generate_twist_knot(o.twist, o.clasp == "+" ? 1 : -1));
    } else {
      throw CLI::ValidationError("generate", "choose one of --random, --unknot, --unlink, --torus, --twist");
    }
    out << encode_lines(grids);
    return 0;
  }

  if (cmd("load")) {
    if (o.list) {
      if (o.legendrian) {
        for (const auto& e : available_legendrian_knots()) out << e.name << " " << e.tb << " " << e.rot << "\n";
      } else {
        for (const auto& name : available_knots()) out << name << "\n";
      }
      return 0;
    }
    if (o.name.empty()) throw CLI::ValidationError("load", "a knot name or --list is required");
    const GridDiagram g = o.legendrian ? load_legendrian_knot(o.name, o.tb, o.rot) : load_knot(o.name);
    out << encode(g) << "\n";
    return 0;
  }

  if (cmd("simplify")) {
    seed_note();
    const EffortSpec effort = parse_effort(o.effort, o.seed);
    const MoveMode mode = parse_mode(o.mode);
    for (const auto& g : read_grids(o.input, in)) out << encode(simplify_grid(g, effort, mode)) << "\n";
    return 0;
  }

  if (cmd("scramble")) {
    seed_note();
    const MoveMode mode = parse_mode(o.mode);
    const auto grids = read_grids(o.input, in);
    for (std::size_t i = 0; i < grids.size(); ++i) {
      // Line i of a batch uses substream i, so a single grid uses the seed itself.
      const std::uint64_t seed = grids.size() == 1 ? o.seed : derive_seed(o.seed, i);
      out << encode(scramble_grid(grids[i], o.steps, mode, seed)) << "\n";
    }
    return 0;
  }

  if (cmd("moves")) {
    const GridDiagram g = read_one(o.input, in);
    if (!o.apply.empty()) {
      out << encode(apply_move(g, move_from_json(o.apply))) << "\n";
      return 0;
    }
    const MoveMode mode = parse_mode(o.mode);
    if (o.link_changing && mode != MoveMode::Topological) {
      throw CLI::ValidationError("moves", "--link-changing only applies in topological mode");
    }
    const std::vector<Move> moves =
        o.link_changing ? legal_moves(g, {.include_link_changing = true}) : permitted_moves(g, mode);
    for (const Move& m : moves) out << to_json(m) << "\n";
    return 0;
  }

  if (cmd("invariants")) {
    for (const auto& g : read_grids(o.input, in)) out << invariants_json(g) << "\n";
    return 0;
  }

  if (cmd("transform")) {
    const GridDiagram g = read_one(o.input, in);
    GridDiagram result = g;
    if (o.op == "mirror") {
      result = mirror_grid(g);
    } else if (o.op == "rotate") {
      result = rotate(g);
    } else if (o.op == "invert") {
      result = invert_orientation(g);
    } else if (o.op == "transpose") {
      result = transpose(g);
    } else if (o.op == "parallel") {
      result = parallel_copies(g, o.copies);
    } else if (o.op == "sum" || o.op == "union") {
      if (o.input2.empty()) throw CLI::ValidationError("transform", "--with is required for " + o.op);
      std::istringstream none;
      const GridDiagram h = read_one(o.input2, none);
      result = o.op == "sum" ? connected_sum(g, h) : disjoint_union(g, h);
    }
    out << encode(result.with_name(std::nullopt)) << "\n";
    return 0;
  }

  if (cmd("convert")) {
    for (const auto& g : read_grids(o.input, in)) {
      if (o.to == "braid") {
        const BraidWord w = convert_to_braid(g, o.simplify_first);
        out << to_string(w) << "\n";
      } else {
        out << to_string(gauss_code(g)) << "\n";
      }
    }
    return 0;
  }

  if (cmd("draw")) {
    const GridDiagram g = read_one(o.input, in);
    out << (o.format == "svg" ? draw_svg(g, o.cell) : draw_ascii(g));
    return 0;
  }

  if (cmd("stats")) {
    o.stats.seed = o.seed;
    seed_note();
    const auto records = run_experiment(o.stats);
    const std::string csv = to_csv(records);
    if (o.out.empty() || o.out == "-") {
      out << csv;
    } else {
      std::ofstream file(o.out);
      if (!file) throw GridError(ErrorCode::InvalidArgument, "cannot write " + o.out);
      file << csv;
    }
    if (!o.plot.empty()) write_plots(records, o.plot);
    return 0;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid diagrams of knots and links: generation, moves, invariants and statistics.", "gridkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "Print a grid (or JSONL list of grids)");
  auto* random = gen->add_flag("--random", o.random, "Uniform random grid");
  gen->add_option("-n", o.n, "Grid number for --random")->needs(random);
  gen->add_option("--components", o.components, "Required component count for --random")->needs(random);
  gen->add_option("--count", o.count, "Number of random grids (JSONL)")->needs(random)->check(CLI::PositiveNumber);
  gen->add_option("--unknot", o.unknot, "Staircase unknot of the given size");
  gen->add_option("--unlink", o.unlink, "Unlink with the given number of components");
  gen->add_option("--torus", o.torus, "Torus link T(P,Q)")->expected(2);
  auto* twist = gen->add_option("--twist", o.twist, "Twist knot with K half twists");
  gen->add_option("--clasp", o.clasp, "Clasp crossing sign for --twist: + or -")->needs(twist)->capture_default_str();
  add_seed(gen, o);

  auto* load = app.add_subcommand("load", "Print a library grid");
  load->add_option("name", o.name, "Knot name, e.g. 7_3");
  load->add_flag("--list", o.list, "List the available names");
  load->add_flag("--legendrian", o.legendrian, "Use the Legendrian library (needs --tb and --rot)");
  load->add_option("--tb", o.tb, "Thurston-Bennequin number");
  load->add_option("--rot", o.rot, "Rotation number");

  const std::vector<std::string> modes{"topological", "legendrian", "transverse"};
  auto* simp = app.add_subcommand("simplify", "Randomized simplification");
  add_input(simp, o.input);
  simp->add_option("--effort", o.effort, "low, default, high or ROUNDS:WALK")->capture_default_str();
  simp->add_option("--mode", o.mode, "Move set")->check(CLI::IsMember(modes))->capture_default_str();
  add_seed(simp, o);

  auto* scr = app.add_subcommand("scramble", "Apply random moves");
  add_input(scr, o.input);
  scr->add_option("--steps", o.steps, "Number of moves")->check(CLI::NonNegativeNumber)->capture_default_str();
  scr->add_option("--mode", o.mode, "Move set")->check(CLI::IsMember(modes))->capture_default_str();
  add_seed(scr, o);

  auto* mv = app.add_subcommand("moves", "List legal moves, or apply one");
  add_input(mv, o.input);
  mv->add_option("--mode", o.mode, "Move set")->check(CLI::IsMember(modes))->capture_default_str();
  mv->add_flag("--link-changing", o.link_changing, "Include crossing changes and band moves");
  mv->add_option("--apply", o.apply, "Move as JSON, e.g. {\"kind\":\"CyclicShift\",\"axis\":\"rows\",\"dir\":1}");

  auto* inv = app.add_subcommand("invariants", "Print invariants as JSON");
  add_input(inv, o.input);

  auto* tr = app.add_subcommand("transform", "Mirror, rotate, sum, ...");
  add_input(tr, o.input);
  tr->add_option("--op", o.op, "Operation")
      ->required()
      ->check(CLI::IsMember({"mirror", "rotate", "invert", "transpose", "parallel", "sum", "union"}));
  tr->add_option("--with", o.input2, "Second grid file for sum and union");
  tr->add_option("--copies", o.copies, "Copies for parallel")->check(CLI::PositiveNumber)->capture_default_str();

  auto* conv = app.add_subcommand("convert", "Braid word or Gauss code");
  add_input(conv, o.input);
  conv->add_option("--to", o.to, "Output kind")->check(CLI::IsMember({"braid", "gauss"}))->capture_default_str();
  conv->add_flag("--simplify", o.simplify_first, "Simplify before building the braid");

  auto* draw = app.add_subcommand("draw", "ASCII or SVG picture");
  add_input(draw, o.input);
  draw->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  draw->add_option("--cell", o.cell, "SVG cell size in pixels")->capture_default_str();

  auto* st = app.add_subcommand("stats", "Monte Carlo averages of invariants of random grids");
  st->add_option("--n-min", o.stats.n_min, "Smallest grid number")->capture_default_str();
  st->add_option("--n-max", o.stats.n_max, "Largest grid number")->capture_default_str();
  st->add_option("--step", o.stats.step, "Grid number step")->capture_default_str();
  st->add_option("--samples", o.stats.samples, "Samples per grid number")->capture_default_str();
  st->add_option("--threads", o.stats.threads, "Worker threads, 0 = all cores")->capture_default_str();
  st->add_option("--out", o.out, "CSV path; standard output when omitted");
  st->add_option("--plot", o.plot, "Directory for SVG plots");
  add_seed(st, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    return dispatch(app, o, in, out, err);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GridError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace gridkit
