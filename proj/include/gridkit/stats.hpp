#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace gridkit {

struct MeanStd {
  double mean = 0;
  double std = 0;  // sample standard deviation (n - 1), 0 for one sample
};

struct StatsRecord {
  int n = 0;
  int samples = 0;
  MeanStd len_over_n, cross_over_n, writhe, tb, rot, comp;
  /// Counts of 1, 2, 3, 4 and 5-or-more components.
  std::array<int, 5> comp_hist{};
};

struct ExperimentSpec {
  int n_min = 10;
  int n_max = 60;
  int step = 10;
  int samples = 200;
  std::uint64_t seed = 1;
  /// Worker threads; 0 means hardware concurrency.  Never affects results.
  int threads = 0;
};

/// Sample i at grid number n is generated from
/// derive_seed(derive_seed(seed, n), i).
std::vector<StatsRecord> run_experiment(const ExperimentSpec& spec);

struct LineFit {
  double slope;
  double intercept;
};

/// Ordinary least squares.  Throws DegenerateInput with fewer than two
/// points or when all x coincide.
LineFit fit_line(const std::vector<std::pair<double, double>>& points);

std::string stats_csv_header();
std::string to_csv(const std::vector<StatsRecord>& records);

/// Writes one SVG per panel (length, crossings, writhe, tb, rotation,
/// components) into `dir`, with the least-squares line drawn over the means.
void write_plots(const std::vector<StatsRecord>& records, const std::filesystem::path& dir);

}  // namespace gridkit
