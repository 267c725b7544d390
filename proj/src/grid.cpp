#include "gridkit/grid.hpp"

#include <sstream>

#include "gridkit/error.hpp"
#include "json.hpp"

namespace gridkit {

namespace {

std::vector<int> inverse_checked(const std::vector<int>& perm, char label) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> inv(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = perm[i];
    if (v < 0 || v >= n) {
      throw GridError(ErrorCode::NotAPermutation,
                      std::string(1, label) + "[" + std::to_string(i) + "]=" + std::to_string(v) + " out of range");
    }
    if (inv[v] != -1) {
      throw GridError(ErrorCode::NotAPermutation, std::string(1, label) + " repeats " + std::to_string(v));
    }
    inv[v] = i;
  }
  return inv;
}

}  // namespace

GridDiagram::GridDiagram(std::vector<int> xs, std::vector<int> os, std::optional<std::string> name)
    : xs_(std::move(xs)), os_(std::move(os)), name_(std::move(name)) {
  if (xs_.size() != os_.size()) {
    throw GridError(ErrorCode::NotAPermutation, "x and o have different lengths");
  }
  if (xs_.size() < 2) {
    throw GridError(ErrorCode::TooSmall, "grid number must be at least 2");
  }
  x_row_ = inverse_checked(xs_, 'x');
  o_row_ = inverse_checked(os_, 'o');
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (xs_[i] == os_[i]) {
      throw GridError(ErrorCode::Collision, "row " + std::to_string(i));
    }
  }
}

GridDiagram GridDiagram::with_name(std::optional<std::string> name) const {
  GridDiagram g = *this;
  g.name_ = std::move(name);
  return g;
}

GridDiagram validate(std::vector<int> xs, std::vector<int> os) { return GridDiagram(std::move(xs), std::move(os)); }

GridDiagram transpose(const GridDiagram& g) {
  const int n = g.size();
  std::vector<int> xs(n), os(n);
  for (int c = 0; c < n; ++c) {
    xs[c] = g.row_of_x(c);
    os[c] = g.row_of_o(c);
  }
  return GridDiagram(std::move(xs), std::move(os), g.name());
}

std::vector<Segment> segments(const GridDiagram& g) {
  const int n = g.size();
  std::vector<Segment> out;
  out.reserve(2 * n);
  for (int r = 0; r < n; ++r) out.push_back({Axis::Rows, r, g.o(r), g.x(r)});
  for (int c = 0; c < n; ++c) out.push_back({Axis::Columns, c, g.row_of_x(c), g.row_of_o(c)});
  return out;
}

std::string encode(const GridDiagram& g) {
  std::ostringstream out;
  auto list = [&out](std::span<const int> v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out << ',';
      out << v[i];
    }
    out << ']';
  };
  out << "{\"x\":";
  list(g.xs());
  out << ",\"o\":";
  list(g.os());
  if (g.name()) out << ",\"name\":" << nlohmann::json(*g.name()).dump();
  out << '}';
  return out.str();
}

GridDiagram decode(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GridError(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object()) throw GridError(ErrorCode::ParseError, "expected a JSON object");
  auto indices = [&doc](const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw GridError(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
    if (!it->is_array()) throw GridError(ErrorCode::ParseError, std::string("\"") + key + "\" is not an array");
    std::vector<int> v;
    for (const auto& e : *it) {
      if (!e.is_number_integer()) throw GridError(ErrorCode::ParseError, std::string("non-integer in \"") + key + "\"");
      v.push_back(e.get<int>());
    }
    return v;
  };
  std::vector<int> xs = indices("x");
  std::vector<int> os = indices("o");
  std::optional<std::string> name;
  if (auto it = doc.find("name"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw GridError(ErrorCode::ParseError, "\"name\" is not a string");
    name = it->get<std::string>();
  }
  return GridDiagram(std::move(xs), std::move(os), std::move(name));
}

std::string encode_lines(std::span<const GridDiagram> grids) {
  std::string out;
  for (const auto& g : grids) {
    out += encode(g);
    out += '\n';
  }
  return out;
}

std::vector<GridDiagram> decode_lines(std::string_view text) {
  std::vector<GridDiagram> grids;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) grids.push_back(decode(line));
    start = end + 1;
  }
  return grids;
}

}  // namespace gridkit
