#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridkit {

enum class Axis { Rows, Columns };
enum class Marking { X, O };

/// A straight piece of the link: the horizontal segment of a row (oriented
/// O -> X) or the vertical segment of a column (oriented X -> O).
struct Segment {
  Axis axis;
  int index;  // row for horizontal, column for vertical
  int from;   // coordinate of the starting marking
  int to;     // coordinate of the ending marking

  int length() const { return from < to ? to - from : from - to; }
  bool operator==(const Segment&) const = default;
};

/// An n x n grid diagram stored as two collision-free permutations.
///
/// Rows are indexed bottom-up and columns left-to-right, both from 0.  Row i
/// holds its X marking in column xs()[i] and its O marking in column os()[i].
/// Values are immutable; every operation in the library returns a new grid.
class GridDiagram {
 public:
  /// Validating constructor.  Throws GridError with NotAPermutation,
  /// Collision or TooSmall.
  GridDiagram(std::vector<int> xs, std::vector<int> os, std::optional<std::string> name = std::nullopt);

  int size() const { return static_cast<int>(xs_.size()); }
  std::span<const int> xs() const { return xs_; }
  std::span<const int> os() const { return os_; }
  const std::optional<std::string>& name() const { return name_; }

  int x(int row) const { return xs_[row]; }
  int o(int row) const { return os_[row]; }
  /// Row holding the X (resp. O) marking of a column.
  int row_of_x(int col) const { return x_row_[col]; }
  int row_of_o(int col) const { return o_row_[col]; }

  bool has_x(int row, int col) const { return xs_[row] == col; }
  bool has_o(int row, int col) const { return os_[row] == col; }

  GridDiagram with_name(std::optional<std::string> name) const;

  /// Equality of the marking sets; the name is metadata and ignored.
  bool operator==(const GridDiagram& other) const { return xs_ == other.xs_ && os_ == other.os_; }

 private:
  std::vector<int> xs_;
  std::vector<int> os_;
  std::vector<int> x_row_;
  std::vector<int> o_row_;
  std::optional<std::string> name_;
};

GridDiagram validate(std::vector<int> xs, std::vector<int> os);

/// Reflection in the main diagonal: the marking in square (r, c) moves to
/// (c, r) and keeps its type.  Column operations that only permute lines are
/// written as row operations on the transpose.
GridDiagram transpose(const GridDiagram& g);

/// All 2n segments: n horizontal (rows 0..n-1) followed by n vertical.
std::vector<Segment> segments(const GridDiagram& g);

/// Canonical single-line JSON: {"x":[...],"o":[...]} plus "name" when set.
std::string encode(const GridDiagram& g);
GridDiagram decode(std::string_view text);

/// One grid per non-blank line.
std::string encode_lines(std::span<const GridDiagram> grids);
std::vector<GridDiagram> decode_lines(std::string_view text);

}  // namespace gridkit
