#include "gridkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

#include "json.hpp"

#include "gridkit/error.hpp"
#include "gridkit/invariants.hpp"
#include "gridkit/rng.hpp"
#include "layout.hpp"
#include "resources.hpp"

namespace gridkit {

namespace {

bool collides(const std::vector<int>& xs, const std::vector<int>& os) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == os[i]) return true;
  }
  return false;
}

int crossing_sign_at(const GridDiagram& g, int row, int col) {
  for (const Crossing& c : crossings(g)) {
    if (c.row == row && c.col == col) return c.sign;
  }
  throw GridError(ErrorCode::InvalidArgument, "no crossing at layout square");
}

struct Library {
  std::vector<GridDiagram> knots;
  std::vector<LegendrianEntry> legendrian;
};

const Library& library() {
  static const Library lib = [] {
    Library out;
    for (GridDiagram& g : decode_lines(detail::knot_table())) out.knots.push_back(std::move(g));
    std::string_view rest = detail::legendrian_table();
    while (!rest.empty()) {
      const auto eol = rest.find('\n');
      const std::string_view line = rest.substr(0, eol);
      rest = eol == std::string_view::npos ? std::string_view{} : rest.substr(eol + 1);
      if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      const auto j = nlohmann::json::parse(line);
      GridDiagram g = decode(line);
      out.legendrian.push_back({j.at("name").get<std::string>(), std::move(g), j.at("tb").get<int>(), j.at("rot").get<int>()});
    }
    return out;
  }();
  return lib;
}

}  // namespace

GridDiagram generate_random_grid(const RandomSpec& spec) {
  if (spec.n < 2) throw GridError(ErrorCode::TooSmall, "grid number must be at least 2");
  if (spec.components && (*spec.components < 1 || *spec.components > spec.n / 2)) {
    throw GridError(ErrorCode::InvalidArgument, "components must lie in [1, n/2]");
  }
  Rng rng(spec.seed);
  std::vector<int> xs(spec.n), os(spec.n);
  for (int accepted = 0; accepted < spec.max_tries;) {
    std::iota(xs.begin(), xs.end(), 0);
    std::iota(os.begin(), os.end(), 0);
    rng.shuffle(std::span<int>(xs));
    rng.shuffle(std::span<int>(os));
    if (collides(xs, os)) continue;
    GridDiagram g(xs, os);
    if (!spec.components || number_of_components(g) == *spec.components) return g;
    ++accepted;
  }
  throw GridError(ErrorCode::BudgetExhausted, "no grid with the requested component count");
}

std::vector<GridDiagram> generate_grid_list(int n, int count, std::uint64_t seed) {
  if (count < 1) throw GridError(ErrorCode::InvalidArgument, "count must be positive");
  std::vector<GridDiagram> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(generate_random_grid({.n = n, .components = std::nullopt, .seed = derive_seed(seed, i)}));
  }
  return out;
}

GridDiagram generate_unknot(int n) {
  if (n < 2) throw GridError(ErrorCode::TooSmall, "grid number must be at least 2");
  std::vector<int> xs(n), os(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = (i + 1) % n;
    os[i] = i;
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram generate_unlink(int k) {
  if (k < 1) throw GridError(ErrorCode::InvalidArgument, "unlink needs at least one component");
  std::vector<int> xs, os;
  for (int b = 0; b < k; ++b) {
    xs.insert(xs.end(), {2 * b + 1, 2 * b});
    os.insert(os.end(), {2 * b, 2 * b + 1});
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram generate_torus_link(int p, int q) {
  if (p < 1 || q < 1) throw GridError(ErrorCode::InvalidArgument, "torus parameters must be positive");
  const int n = p + q;
  std::vector<int> xs(n), os(n);
  for (int i = 0; i < n; ++i) {
    os[i] = i;
    xs[i] = (i + q) % n;
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram generate_twist_knot(int k, int clasp_sign) {
  if (k < 1) throw GridError(ErrorCode::InvalidArgument, "twist count must be positive");
  if (clasp_sign != 1 && clasp_sign != -1) throw GridError(ErrorCode::InvalidArgument, "clasp sign must be +1 or -1");
  // Twists between the middle strands of a 4-plat, then a two-crossing
  // clasp.  Which of the two clasp words yields the requested crossing sign
  // depends on the parity of k, so both are tried.
  for (int flip : {1, -1}) {
    std::vector<int> word(k, 2);
    word.push_back(-flip);
    word.push_back(2 * flip);
    const auto layout = detail::layout_braid(word, 4, true);
    const auto [r1, c1] = layout.letter_crossings[k];
    const auto [r2, c2] = layout.letter_crossings[k + 1];
    const int s1 = crossing_sign_at(layout.grid, r1, c1);
    const int s2 = crossing_sign_at(layout.grid, r2, c2);
    if (s1 == clasp_sign && s2 == clasp_sign) return layout.grid;
  }
  throw GridError(ErrorCode::InvalidArgument, "no clasp with the requested sign");
}

GridDiagram braid_closure_grid(std::span<const int> word, int strands) {
  return detail::layout_braid(word, strands, false).grid;
}

GridDiagram plat_closure_grid(std::span<const int> word, int strands) {
  return detail::layout_braid(word, strands, true).grid;
}

std::vector<std::string> available_knots() {
  std::vector<std::string> names;
  for (const auto& g : library().knots) names.push_back(*g.name());
  return names;
}

GridDiagram load_knot(const std::string& name) {
  for (const auto& g : library().knots) {
    if (g.name() == name) return g;
  }
  throw GridError(ErrorCode::UnknownName, name);
}

std::vector<LegendrianEntry> available_legendrian_knots() { return library().legendrian; }

GridDiagram load_legendrian_knot(const std::string& name, int tb, int rot) {
  for (const auto& e : library().legendrian) {
    if (e.name == name && e.tb == tb && e.rot == rot) return e.grid;
  }
  throw GridError(ErrorCode::UnknownEntry, name + " tb=" + std::to_string(tb) + " rot=" + std::to_string(rot));
}

}  // namespace gridkit
