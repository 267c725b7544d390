#include "gridkit/transforms.hpp"

#include "gridkit/error.hpp"

namespace gridkit {

namespace {

struct RowSum {
  GridDiagram grid;
  bool kink_free;
};

// `lower` shares its top row with the bottom row of `upper`; the X of the
// lower row and the O of the upper row sit in the merged column and cancel.
RowSum stacked_sum(const GridDiagram& lower, const GridDiagram& upper) {
  const int n1 = lower.size(), n2 = upper.size();
  const int top = n1 - 1;
  const int a = lower.o(top), b = lower.x(top);
  const int d = upper.o(0), e = upper.x(0);

  // Column order: lower columns left of b, upper columns left of d, the
  // merged column, lower columns right of b, upper columns right of d.
  const int merged = b + d;
  auto lower_col = [&](int c) { return c < b ? c : (c == b ? merged : c + d); };
  auto upper_col = [&](int c) { return c < d ? c + b : (c == d ? merged : c + n1 - 1); };

  const int n = n1 + n2 - 1;
  std::vector<int> xs(n), os(n);
  for (int r = 0; r < top; ++r) {
    xs[r] = lower_col(lower.x(r));
    os[r] = lower_col(lower.o(r));
  }
  for (int r = 1; r < n2; ++r) {
    xs[top + r] = upper_col(upper.x(r));
    os[top + r] = upper_col(upper.o(r));
  }
  xs[top] = upper_col(e);
  os[top] = lower_col(a);
  return {GridDiagram(std::move(xs), std::move(os)), (a < b) == (e < d)};
}

}  // namespace

GridDiagram invert_orientation(const GridDiagram& g) {
  return GridDiagram(std::vector<int>(g.os().begin(), g.os().end()), std::vector<int>(g.xs().begin(), g.xs().end()),
                     g.name());
}

GridDiagram mirror_grid(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> xs(n), os(n);
  for (int r = 0; r < n; ++r) {
    xs[r] = n - 1 - g.x(r);
    os[r] = n - 1 - g.o(r);
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

GridDiagram rotate(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> xs(n), os(n);
  for (int c = 0; c < n; ++c) {
    xs[c] = n - 1 - g.row_of_x(c);
    os[c] = n - 1 - g.row_of_o(c);
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

GridDiagram disjoint_union(const GridDiagram& a, const GridDiagram& b) {
  std::vector<int> xs(a.xs().begin(), a.xs().end());
  std::vector<int> os(a.os().begin(), a.os().end());
  for (int r = 0; r < b.size(); ++r) {
    xs.push_back(b.x(r) + a.size());
    os.push_back(b.o(r) + a.size());
  }
  return GridDiagram(std::move(xs), std::move(os));
}

GridDiagram connected_sum(const GridDiagram& a, const GridDiagram& b) {
  RowSum first = stacked_sum(a, b);
  if (first.kink_free) return first.grid;
  if (RowSum s = stacked_sum(b, a); s.kink_free) return s.grid;
  const GridDiagram ta = transpose(a), tb = transpose(b);
  if (RowSum s = stacked_sum(ta, tb); s.kink_free) return transpose(s.grid);
  if (RowSum s = stacked_sum(tb, ta); s.kink_free) return transpose(s.grid);
  return first.grid;
}

GridDiagram parallel_copies(const GridDiagram& g, int k) {
  if (k < 1) throw GridError(ErrorCode::InvalidArgument, "copies must be at least 1");
  const int n = g.size();
  std::vector<int> xs(n * k), os(n * k);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < k; ++j) {
      xs[r * k + j] = g.x(r) * k + j;
      os[r * k + j] = g.o(r) * k + j;
    }
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

}  // namespace gridkit
