#include "layout.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>

#include "gridkit/error.hpp"

namespace gridkit::detail {

namespace {

struct Point {
  std::int64_t x;
  std::int64_t y;
  bool operator==(const Point&) const = default;
};

// Vertical pieces need pairwise distinct x.  A piece at nominal position
// `base` gets x = base * kScale + id, with ids increasing in creation order,
// which keeps every piece at its nominal place relative to all other bases.
constexpr std::int64_t kScale = std::int64_t{1} << 24;

class Drawing {
 public:
  explicit Drawing(int strands) : strands_(strands) {
    for (int p = 0; p < strands; ++p) {
      paths_.push_back({{fresh_x(4 * p), 0}});
      at_.push_back(p);
    }
  }

  // One crossing between positions i and i+1.  The under-strand jogs across
  // the over-strand's vertical piece; the over-strand then steps over.
  std::pair<Point, Point> letter(int letter, int slot) {
    const int i = std::abs(letter) - 1;
    if (i < 0 || i + 1 >= strands_) throw GridError(ErrorCode::InvalidArgument, "braid letter out of range");
    const std::int64_t y1 = 4 * slot + 5, y2 = y1 + 1, y3 = y1 + 2;
    const int left = at_[i], right = at_[i + 1];
    std::pair<Point, Point> crossing;
    if (letter > 0) {
      // left over right: the right strand ducks under to the left.
      crossing = {{x_of(left), y1}, {}};
      jog(right, y1, fresh_x(4 * i - 2));
      jog(left, y2, fresh_x(4 * i + 4));
      jog(right, y3, fresh_x(4 * i));
    } else {
      crossing = {{x_of(right), y1}, {}};
      jog(left, y1, fresh_x(4 * i + 6));
      jog(right, y2, fresh_x(4 * i));
      jog(left, y3, fresh_x(4 * i + 4));
    }
    std::swap(at_[i], at_[i + 1]);
    return crossing;
  }

  std::vector<std::vector<Point>> close_braid(std::int64_t top) {
    const int m = strands_;
    std::vector<int> next(m);
    for (int p = 0; p < m; ++p) {
      auto& path = paths_[at_[p]];
      const std::int64_t level = m - p;
      const std::int64_t right = fresh_x(4 * m + 4 + 2 * level);
      path.push_back({x_of(at_[p]), top + level});
      path.push_back({right, top + level});
      path.push_back({right, -level});
      path.push_back({paths_[p].front().x, -level});
      next[at_[p]] = p;
    }
    std::vector<std::vector<Point>> cycles;
    std::vector<bool> used(m, false);
    for (int s = 0; s < m; ++s) {
      if (used[s]) continue;
      std::vector<Point> cycle;
      for (int k = s; !used[k]; k = next[k]) {
        used[k] = true;
        cycle.insert(cycle.end(), paths_[k].begin(), paths_[k].end());
      }
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  std::vector<std::vector<Point>> close_plat(std::int64_t top) {
    const int m = strands_;
    if (m % 2 != 0) throw GridError(ErrorCode::InvalidArgument, "plat closure needs an even strand count");
    std::vector<int> end_pos(m);  // path -> position at the top
    for (int p = 0; p < m; ++p) end_pos[at_[p]] = p;
    std::vector<bool> used(m, false);
    std::vector<std::vector<Point>> cycles;
    for (int s = 0; s < m; ++s) {
      if (used[s]) continue;
      std::vector<Point> cycle;
      int path = s;
      bool upward = true;
      while (!used[path]) {
        used[path] = true;
        const auto& pts = paths_[path];
        if (upward) {
          cycle.insert(cycle.end(), pts.begin(), pts.end());
          const int q = end_pos[path];
          const int partner = at_[q ^ 1];
          const std::int64_t cap = top + 1 + q / 2;
          cycle.push_back({x_of(path), cap});
          cycle.push_back({x_of(partner), cap});
          path = partner;
        } else {
          cycle.insert(cycle.end(), pts.rbegin(), pts.rend());
          const int q = path;  // paths are numbered by their bottom position
          const int partner = q ^ 1;
          const std::int64_t cap = -1 - q / 2;
          cycle.push_back({pts.front().x, cap});
          cycle.push_back({paths_[partner].front().x, cap});
          path = partner;
        }
        upward = !upward;
      }
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

 private:
  std::int64_t fresh_x(std::int64_t base) { return base * kScale + next_id_++; }
  std::int64_t x_of(int path) const { return paths_[path].back().x; }
  void jog(int path, std::int64_t y, std::int64_t new_x) {
    auto& pts = paths_[path];
    pts.push_back({pts.back().x, y});
    pts.push_back({new_x, y});
  }

  int strands_;
  std::int64_t next_id_ = 0;
  std::vector<std::vector<Point>> paths_;
  std::vector<int> at_;  // position -> path
};

// Drops repeated and collinear points so that only corners remain.
std::vector<Point> corners_of(std::vector<Point> pts) {
  bool changed = true;
  while (changed && pts.size() >= 3) {
    changed = false;
    std::vector<Point> kept;
    const std::size_t n = pts.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Point& prev = kept.empty() ? pts[(k + n - 1) % n] : kept.back();
      const Point& cur = pts[k];
      const Point& next = pts[(k + 1) % n];
      const bool redundant = cur == prev || (prev.x == cur.x && cur.x == next.x) || (prev.y == cur.y && cur.y == next.y);
      if (redundant) {
        changed = true;
      } else {
        kept.push_back(cur);
      }
    }
    pts = std::move(kept);
  }
  return pts;
}

}  // namespace

BraidLayout layout_braid(std::span<const int> word, int strands, bool plat) {
  if (strands < 1) throw GridError(ErrorCode::InvalidArgument, "strand count must be positive");
  Drawing drawing(strands);
  std::vector<Point> letter_points;
  for (std::size_t t = 0; t < word.size(); ++t) {
    letter_points.push_back(drawing.letter(word[t], static_cast<int>(t)).first);
  }
  const std::int64_t top = 4 * static_cast<std::int64_t>(word.size()) + 8;
  auto cycles = plat ? drawing.close_plat(top) : drawing.close_braid(top);

  std::map<std::int64_t, int> col_rank, row_rank;
  for (auto& cycle : cycles) {
    cycle = corners_of(std::move(cycle));
    for (const Point& p : cycle) {
      col_rank[p.x] = 0;
      row_rank[p.y] = 0;
    }
  }
  int k = 0;
  for (auto& [x, r] : col_rank) r = k++;
  k = 0;
  for (auto& [y, r] : row_rank) r = k++;
  const int n = static_cast<int>(row_rank.size());
  if (static_cast<int>(col_rank.size()) != n) throw GridError(ErrorCode::InvalidArgument, "layout is not a grid");

  std::vector<int> xs(n, -1), os(n, -1);
  for (const auto& cycle : cycles) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Point& prev = cycle[(i + len - 1) % len];
      const Point& cur = cycle[i];
      // Rows are traversed O -> X, so a corner reached along its row is an X.
      const bool arrives_horizontally = prev.y == cur.y;
      (arrives_horizontally ? xs : os)[row_rank[cur.y]] = col_rank[cur.x];
    }
  }

  BraidLayout out{GridDiagram(std::move(xs), std::move(os)), {}};
  for (const Point& p : letter_points) {
    // The over-strand's vertical piece keeps its x through the crossing; the
    // jog's height is the crossing row.
    out.letter_crossings.emplace_back(row_rank.at(p.y), col_rank.at(p.x));
  }
  return out;
}

}  // namespace gridkit::detail
