#include "gridkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "gridkit/error.hpp"
#include "gridkit/generators.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/rng.hpp"

namespace gridkit {

namespace {

struct Sample {
  double len_over_n, cross_over_n, writhe, tb, rot, comp;
};

Sample measure(int n, std::uint64_t seed) {
  const GridDiagram g = generate_random_grid({.n = n, .components = std::nullopt, .seed = seed});
  return {static_cast<double>(grid_length(g)) / n,
          static_cast<double>(crossing_number(g)) / n,
          static_cast<double>(writhe(g)),
          static_cast<double>(thurston_bennequin(g)),
          static_cast<double>(rotation_number(g)),
          static_cast<double>(number_of_components(g))};
}

MeanStd summarize(const std::vector<Sample>& v, double Sample::*field) {
  double sum = 0;
  for (const Sample& s : v) sum += s.*field;
  const double mean = sum / v.size();
  double sq = 0;
  for (const Sample& s : v) sq += (s.*field - mean) * (s.*field - mean);
  return {mean, v.size() > 1 ? std::sqrt(sq / (v.size() - 1)) : 0.0};
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::vector<StatsRecord> run_experiment(const ExperimentSpec& spec) {
  if (spec.n_min < 2 || spec.n_max < spec.n_min || spec.step < 1 || spec.samples < 1) {
    throw GridError(ErrorCode::InvalidArgument, "need 2 <= n_min <= n_max, step >= 1, samples >= 1");
  }
  std::vector<int> sizes;
  for (int n = spec.n_min; n <= spec.n_max; n += spec.step) sizes.push_back(n);

  // One flat task list; each task writes only its own slot, and aggregation
  // below runs in index order, so the thread count cannot change the output.
  const std::size_t per = spec.samples;
  std::vector<Sample> all(sizes.size() * per);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(spec.threads > 0 ? spec.threads : hw, all.size());
  auto work = [&](std::size_t w) {
    for (std::size_t t = w; t < all.size(); t += workers) {
      const int n = sizes[t / per];
      all[t] = measure(n, derive_seed(derive_seed(spec.seed, n), t % per));
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& th : pool) th.join();

  std::vector<StatsRecord> out;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const std::vector<Sample> v(all.begin() + k * per, all.begin() + (k + 1) * per);
    StatsRecord r;
    r.n = sizes[k];
    r.samples = spec.samples;
    r.len_over_n = summarize(v, &Sample::len_over_n);
    r.cross_over_n = summarize(v, &Sample::cross_over_n);
    r.writhe = summarize(v, &Sample::writhe);
    r.tb = summarize(v, &Sample::tb);
    r.rot = summarize(v, &Sample::rot);
    r.comp = summarize(v, &Sample::comp);
    for (const Sample& s : v) ++r.comp_hist[std::min(static_cast<int>(s.comp), 5) - 1];
    out.push_back(r);
  }
  return out;
}

LineFit fit_line(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw GridError(ErrorCode::DegenerateInput, "need at least two points");
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= points.size();
  my /= points.size();
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx == 0) throw GridError(ErrorCode::DegenerateInput, "all x values are equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

std::string stats_csv_header() {
  return "n,samples,len_over_n_mean,len_over_n_std,cross_over_n_mean,cross_over_n_std,writhe_mean,writhe_std,"
         "tb_mean,tb_std,rot_mean,rot_std,comp_mean,comp_hist_1,comp_hist_2,comp_hist_3,comp_hist_4,comp_hist_5plus";
}

std::string to_csv(const std::vector<StatsRecord>& records) {
  std::ostringstream out;
  out << stats_csv_header() << "\n";
  for (const StatsRecord& r : records) {
    out << r.n << ',' << r.samples;
    for (const MeanStd* m : {&r.len_over_n, &r.cross_over_n, &r.writhe, &r.tb, &r.rot}) {
      out << ',' << fmt(m->mean) << ',' << fmt(m->std);
    }
    out << ',' << fmt(r.comp.mean);
    for (int h : r.comp_hist) out << ',' << h;
    out << "\n";
  }
  return out.str();
}

void write_plots(const std::vector<StatsRecord>& records, const std::filesystem::path& dir) {
  if (records.empty()) throw GridError(ErrorCode::DegenerateInput, "nothing to plot");
  std::filesystem::create_directories(dir);
  struct Panel {
    const char* file;
    const char* title;
    std::function<double(const StatsRecord&)> value;
  };
  const std::vector<Panel> panels = {
      {"length.svg", "mean length / n", [](const StatsRecord& r) { return r.len_over_n.mean; }},
      {"crossings.svg", "mean crossings / n", [](const StatsRecord& r) { return r.cross_over_n.mean; }},
      {"writhe.svg", "mean writhe", [](const StatsRecord& r) { return r.writhe.mean; }},
      {"tb.svg", "mean tb", [](const StatsRecord& r) { return r.tb.mean; }},
      {"rotation.svg", "mean rotation", [](const StatsRecord& r) { return r.rot.mean; }},
      {"components.svg", "P(1 component)",
       [](const StatsRecord& r) { return static_cast<double>(r.comp_hist[0]) / r.samples; }},
  };
  constexpr double W = 480, H = 320, M = 40;
  for (const Panel& p : panels) {
    std::vector<std::pair<double, double>> pts;
    for (const StatsRecord& r : records) pts.emplace_back(r.n, p.value(r));
    double x0 = pts.front().first, x1 = pts.back().first;
    double y0 = pts.front().second, y1 = y0;
    for (const auto& [x, y] : pts) {
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
    if (x1 == x0) x1 = x0 + 1;
    if (y1 == y0) {
      y0 -= 1;
      y1 += 1;
    }
    auto sx = [&](double x) { return M + (x - x0) / (x1 - x0) * (W - 2 * M); };
    auto sy = [&](double y) { return H - M - (y - y0) / (y1 - y0) * (H - 2 * M); };
    std::ofstream svg(dir / p.file);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    svg << "<text x=\"" << M << "\" y=\"20\" font-size=\"14\">" << p.title << "</text>\n";
    svg << "<line x1=\"" << M << "\" y1=\"" << H - M << "\" x2=\"" << W - M << "\" y2=\"" << H - M
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << M << "\" y1=\"" << M << "\" x2=\"" << M << "\" y2=\"" << H - M << "\" stroke=\"black\"/>\n";
    for (const auto& [x, y] : pts) {
      svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"3\"/>\n";
    }
    if (pts.size() >= 2 && pts.front().first != pts.back().first) {
      const LineFit f = fit_line(pts);
      svg << "<line class=\"fit\" x1=\"" << fmt(sx(x0)) << "\" y1=\"" << fmt(sy(f.slope * x0 + f.intercept))
          << "\" x2=\"" << fmt(sx(x1)) << "\" y2=\"" << fmt(sy(f.slope * x1 + f.intercept))
          << "\" stroke=\"red\"/>\n";
      svg << "<text x=\"" << W - 3 * M << "\" y=\"20\" font-size=\"12\">slope " << fmt(f.slope) << "</text>\n";
    }
    svg << "</svg>\n";
  }
}

}  // namespace gridkit
