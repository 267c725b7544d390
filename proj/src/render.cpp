#include "gridkit/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gridkit/error.hpp"
#include "gridkit/invariants.hpp"

namespace gridkit {

std::string draw_ascii(const GridDiagram& g) {
  const int n = g.size();
  std::vector<std::string> lines(n, std::string(n, ' '));
  auto at = [&](int r, int c) -> char& { return lines[n - 1 - r][c]; };
  for (int r = 0; r < n; ++r) {
    for (int c = std::min(g.x(r), g.o(r)) + 1; c < std::max(g.x(r), g.o(r)); ++c) at(r, c) = '-';
  }
  for (int c = 0; c < n; ++c) {
    for (int r = std::min(g.row_of_x(c), g.row_of_o(c)) + 1; r < std::max(g.row_of_x(c), g.row_of_o(c)); ++r) {
      at(r, c) = at(r, c) == '-' ? '+' : '|';
    }
  }
  for (int r = 0; r < n; ++r) {
    at(r, g.x(r)) = 'X';
    at(r, g.o(r)) = 'O';
  }
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

std::string draw_svg(const GridDiagram& g, int cell_px) {
  if (cell_px < 4) throw GridError(ErrorCode::InvalidArgument, "cell_px must be at least 4");
  const int n = g.size();
  const double cell = cell_px;
  const double gap = cell / 4;
  auto cx = [&](int c) { return (c + 0.5) * cell; };
  auto cy = [&](int r) { return (n - 1 - r + 0.5) * cell; };
  std::set<std::pair<int, int>> crossing_squares;
  for (const Crossing& c : crossings(g)) crossing_squares.emplace(c.row, c.col);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * cell_px << "\" height=\"" << n * cell_px
      << "\" viewBox=\"0 0 " << n * cell_px << ' ' << n * cell_px << "\">\n";
  out << "<g stroke=\"black\" stroke-width=\"" << std::max(1, cell_px / 12) << "\" fill=\"none\">\n";
  for (int r = 0; r < n; ++r) {
    const int lo = std::min(g.x(r), g.o(r)), hi = std::max(g.x(r), g.o(r));
    double start = cx(lo);
    for (int c = lo + 1; c < hi; ++c) {
      if (crossing_squares.count({r, c}) == 0) continue;
      out << "<line class=\"h\" x1=\"" << start << "\" y1=\"" << cy(r) << "\" x2=\"" << cx(c) - gap << "\" y2=\""
          << cy(r) << "\"/>\n";
      start = cx(c) + gap;
    }
    out << "<line class=\"h\" x1=\"" << start << "\" y1=\"" << cy(r) << "\" x2=\"" << cx(hi) << "\" y2=\"" << cy(r)
        << "\"/>\n";
  }
  for (int c = 0; c < n; ++c) {
    out << "<line class=\"v\" x1=\"" << cx(c) << "\" y1=\"" << cy(g.row_of_x(c)) << "\" x2=\"" << cx(c)
        << "\" y2=\"" << cy(g.row_of_o(c)) << "\"/>\n";
  }
  out << "</g>\n";
  out << "<g font-family=\"monospace\" font-size=\"" << cell * 0.6 << "\" text-anchor=\"middle\" "
      << "dominant-baseline=\"central\">\n";
  for (int r = 0; r < n; ++r) {
    for (const auto& [col, label] : {std::pair{g.x(r), 'X'}, std::pair{g.o(r), 'O'}}) {
      out << "<rect x=\"" << col * cell + gap << "\" y=\"" << cy(r) - cell / 2 + gap << "\" width=\"" << cell / 2
          << "\" height=\"" << cell / 2 << "\" fill=\"white\"/>";
      out << "<text class=\"mark\" x=\"" << cx(col) << "\" y=\"" << cy(r) << "\">" << label << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace gridkit
