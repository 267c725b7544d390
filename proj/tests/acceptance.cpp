// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "gridkit/cli.hpp"
#include "gridkit/convert.hpp"
#include "gridkit/error.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/moves.hpp"
#include "gridkit/simplify.hpp"
#include "gridkit/stats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace gridkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome unknot_simplification() {
  const auto t0 = Clock::now();
  const GridDiagram u({1, 0}, {0, 1});
  int ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GridDiagram big = scramble_grid(u, 30, MoveMode::Topological, seed);
    ok += simplify_grid(big, parse_effort("default", seed)).size() == 2;
  }
  const double t = seconds_since(t0);
  return {ok >= 99 && t < 60, fmt("%d/100 runs return to 2x2 (need >= 99), %.2f s (limit 60 s)", ok, t)};
}

const std::vector<StatsRecord>& desk_population(double* elapsed = nullptr) {
  static double t = 0;
  static const std::vector<StatsRecord> recs = [] {
    const auto t0 = Clock::now();
    auto r = run_experiment({.n_min = 10, .n_max = 60, .step = 10, .samples = 200, .seed = 1});
    t = seconds_since(t0);
    return r;
  }();
  if (elapsed) *elapsed = t;
  return recs;
}

double slope(const std::vector<StatsRecord>& recs, const std::function<double(const StatsRecord&)>& f) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : recs) pts.emplace_back(r.n, f(r));
  return fit_line(pts).slope;
}

// Largest |mean| / standard error over all n.
double worst_z(const std::vector<StatsRecord>& recs, MeanStd StatsRecord::*field) {
  double z = 0;
  for (const auto& r : recs) {
    const MeanStd& m = r.*field;
    const double se = m.std / std::sqrt(double(r.samples));
    z = std::max(z, se > 0 ? std::abs(m.mean) / se : (m.mean == 0 ? 0 : INFINITY));
  }
  return z;
}

Outcome length_and_crossing_slopes() {
  double t = 0;
  const auto& recs = desk_population(&t);
  const double sl = slope(recs, [](const StatsRecord& r) { return r.len_over_n.mean; });
  const double sc = slope(recs, [](const StatsRecord& r) { return r.cross_over_n.mean; });
  const double z = worst_z(recs, &StatsRecord::writhe);
  const bool pass = sl >= 0.63 && sl <= 0.70 && sc >= 0.10 && sc <= 0.125 && z <= 3 && t < 120;
  return {pass, fmt("len/n slope %.4f [0.63,0.70], cross/n slope %.4f [0.10,0.125], max |writhe|/SE %.2f (<= 3), "
                    "%.2f s",
                    sl, sc, z, t)};
}

Outcome contact_averages() {
  const auto& recs = desk_population();
  const double st = slope(recs, [](const StatsRecord& r) { return r.tb.mean; });
  const double z = worst_z(recs, &StatsRecord::rot);
  return {st >= -0.55 && st <= -0.45 && z <= 3, fmt("tb slope %.4f [-0.55,-0.45], max |rot|/SE %.2f (<= 3)", st, z)};
}

Outcome uniformity() {
  const auto all = oracle::all_grids(3);
  std::map<std::string, int> freq;
  for (const auto& g : all) freq[encode(g)] = 0;
  const int samples = 120000;
  int strays = 0;
  for (int i = 0; i < samples; ++i) {
    const auto g = generate_random_grid({.n = 3, .components = std::nullopt, .seed = derive_seed(4, i)});
    auto it = freq.find(encode(g));
    if (it == freq.end()) ++strays;
    else ++it->second;
  }
  const double e = samples / 12.0;
  double chi = 0;
  for (const auto& [k, v] : freq) chi += (v - e) * (v - e) / e;
  const bool pass = all.size() == 12 && strays == 0 && chi < oracle::kChiSquare11At1Percent;
  return {pass, fmt("%zu grids at n=3, chi-square %.2f (< %.3f for p > 0.01)", all.size(), chi,
                    oracle::kChiSquare11At1Percent)};
}

Outcome move_invariance() {
  long comp_bad = 0, comp_total = 0;
  long comm_bad = 0, comm_total = 0, stab_bad = 0, stab_total = 0, dest_bad = 0, dest_total = 0;
  long cc_bad = 0, cc_total = 0, coh_bad = 0, coh_total = 0, unc_bad = 0, unc_total = 0;
  for (const GridDiagram& g : testing::random_grids(1000, 2, 14, 2024)) {
    const int c = oracle::components(g), w = oracle::writhe(g);
    for (const Move& m : legal_moves(g)) {
      const GridDiagram h = apply_move(g, m);
      ++comp_total;
      comp_bad += oracle::components(h) != c;
      const bool same_w = oracle::writhe(h) == w;
      if (std::holds_alternative<Commutation>(m)) {
        ++comm_total;
        comm_bad += !same_w;
      } else if (std::holds_alternative<Stabilization>(m)) {
        ++stab_total;
        stab_bad += !same_w;
      } else if (std::holds_alternative<Destabilization>(m) || std::holds_alternative<GeneralizedDestabilization>(m)) {
        ++dest_total;
        dest_bad += !same_w;
      }
    }
    for (Axis axis : {Axis::Rows, Axis::Columns}) {
      for (int i = 0; i + 1 < g.size(); ++i) {
        if (classify_adjacent(g, axis, i) == IntervalRelation::Interleaved) {
          ++cc_total;
          cc_bad += std::abs(oracle::writhe(crossing_change(g, axis, i)) - w) != 2;
        }
        try {
          const GridDiagram h = coherent_bs(g, axis, i);
          ++coh_total;
          coh_bad += std::abs(oracle::components(h) - c) != 1;
        } catch (const GridError&) {
        }
        try {
          const GridDiagram h = uncoherent_bs(g, axis, i);
          ++unc_total;
          unc_bad += oracle::components(h) != c;
        } catch (const GridError&) {
        }
      }
    }
  }
  const bool pass = comp_bad + comm_bad + stab_bad + dest_bad + cc_bad + coh_bad + unc_bad == 0 && cc_total > 0 &&
                    coh_total > 0 && unc_total > 0;
  return {pass, fmt("violations/sites: components %ld/%ld, writhe under commutation %ld/%ld, stabilization "
                    "%ld/%ld, destabilization %ld/%ld, crossing change |dw|=2 %ld/%ld, coherent |dc|=1 %ld/%ld, "
                    "uncoherent dc=0 %ld/%ld",
                    comp_bad, comp_total, comm_bad, comm_total, stab_bad, stab_total, dest_bad, dest_total, cc_bad,
                    cc_total, coh_bad, coh_total, unc_bad, unc_total)};
}

Outcome contact_invariance() {
  Rng rng(6);
  int leg_bad = 0, tra_bad = 0;
  const auto grids = testing::random_grids(2000, 2, 12, 66);
  for (int trial = 0; trial < 1000; ++trial) {
    const GridDiagram& g = grids[trial];
    const auto moves = permitted_moves(g, MoveMode::Legendrian);
    const GridDiagram h = apply_move(g, moves[rng.below(moves.size())]);
    leg_bad += thurston_bennequin(h) != thurston_bennequin(g) || rotation_number(h) != rotation_number(g);
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const GridDiagram& g = grids[1000 + trial];
    const auto moves = permitted_moves(g, MoveMode::Transverse);
    const GridDiagram h = apply_move(g, moves[rng.below(moves.size())]);
    tra_bad += self_linking(h) != self_linking(g);
  }
  const GridDiagram u({1, 0}, {0, 1});
  const int tb = thurston_bennequin(u), r = rotation_number(u), sl = self_linking(u);
  return {leg_bad == 0 && tra_bad == 0 && tb == -1 && r == 0 && sl == -1,
          fmt("Legendrian (tb,r) violations %d/1000, transverse sl violations %d/1000, unknot tb=%d r=%d sl=%d",
              leg_bad, tra_bad, tb, r, sl)};
}

Outcome conversion_contracts() {
  int braid_bad = 0, gauss_bad = 0, codec_bad = 0;
  for (const GridDiagram& g : testing::random_grids(1000, 2, 16, 77)) {
    braid_bad += closure_components(convert_to_braid(g)) != oracle::components(g);
    const GaussCode c = gauss_code(g);
    gauss_bad += int(c.signs.size()) != int(oracle::crossings(g).size()) ||
                 std::accumulate(c.signs.begin(), c.signs.end(), 0) != oracle::writhe(g);
    codec_bad += decode(encode(g)) != g;
  }
  return {braid_bad + gauss_bad + codec_bad == 0,
          fmt("braid component mismatches %d/1000, Gauss mismatches %d/1000, encode/decode failures %d/1000",
              braid_bad, gauss_bad, codec_bad)};
}

Outcome torus_law() {
  int bad = 0;
  for (int p = 1; p <= 8; ++p)
    for (int q = 1; q <= 8; ++q) bad += oracle::components(generate_torus_link(p, q)) != std::gcd(p, q);
  const auto cr = oracle::crossings(GridDiagram({2, 3, 4, 0, 1}, {0, 1, 2, 3, 4}));
  bool same = !cr.empty();
  for (const auto& c : cr) same = same && c.sign == cr.front().sign;
  return {bad == 0 && cr.size() == 3 && same,
          fmt("gcd mismatches %d/64, shift-2 grid has %zu crossings, equal signs: %s", bad, cr.size(),
              same ? "yes" : "no")};
}

std::string cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  run_cli(args, in, out, err);
  return out.str() + "\x1f" + err.str();
}

Outcome determinism() {
  int bad = 0, checks = 0;
  auto same = [&](bool b) {
    ++checks;
    bad += !b;
  };
  const GridDiagram k = load_knot("6_2");
  same(generate_random_grid({.n = 25, .components = std::nullopt, .seed = 3}) ==
       generate_random_grid({.n = 25, .components = std::nullopt, .seed = 3}));
  same(generate_random_grid({.n = 25, .components = 2, .seed = 3}) ==
       generate_random_grid({.n = 25, .components = 2, .seed = 3}));
  same(generate_grid_list(12, 20, 5) == generate_grid_list(12, 20, 5));
  for (MoveMode m : {MoveMode::Topological, MoveMode::Legendrian, MoveMode::Transverse}) {
    same(scramble_grid(k, 40, m, 8) == scramble_grid(k, 40, m, 8));
    const GridDiagram big = scramble_grid(k, 40, m, 8);
    same(simplify_grid(big, parse_effort("low", 2), m) == simplify_grid(big, parse_effort("low", 2), m));
  }
  ExperimentSpec spec{.n_min = 5, .n_max = 40, .step = 5, .samples = 50, .seed = 9, .threads = 1};
  const std::string one = to_csv(run_experiment(spec));
  for (int t : {2, 4, 16, 0}) {
    spec.threads = t;
    same(to_csv(run_experiment(spec)) == one);
  }
  const std::string grid = encode(k) + "\n";
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"generate", "--random", "-n", "20", "--seed", "7"},
           {"generate", "--random", "-n", "9", "--count", "5", "--seed", "7"},
           {"scramble", "--steps", "30", "--seed", "7"},
           {"simplify", "--seed", "7"},
           {"simplify", "--mode", "legendrian", "--seed", "7"},
           {"stats", "--n-min", "4", "--n-max", "12", "--step", "4", "--samples", "30", "--seed", "7", "--threads",
            "1"}}) {
    const std::string a = cli(args, grid), b = cli(args, grid);
    same(a == b);
  }
  auto threads = [](const char* t) {
    return cli({"stats", "--n-min", "4", "--n-max", "12", "--step", "4", "--samples", "30", "--seed", "7",
                "--threads", t});
  };
  same(threads("1") == threads("8"));
  return {bad == 0, fmt("%d/%d repeat comparisons byte-identical (threads 1, 2, 4, 16, all)", checks - bad, checks)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"unknot simplification", unknot_simplification},
      {"length and crossing slopes", length_and_crossing_slopes},
      {"contact averages", contact_averages},
      {"uniformity at n=3", uniformity},
      {"move invariance", move_invariance},
      {"contact invariance", contact_invariance},
      {"conversion contracts", conversion_contracts},
      {"torus law", torus_law},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    failed += !o.pass;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
