#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace taquin {

using BigInt = boost::multiprecision::cpp_int;

/// A cell of a diagram, 1-based: row 1 is the top row, column 1 the leftmost.
struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// An integer partition: weakly decreasing positive parts. The empty
/// partition has no parts.
class Partition {
 public:
  Partition() = default;

  /// Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Length of a 1-based row; 0 for rows past the last part.
  int row_length(int row) const;
  bool contains(Cell cell) const;

  Partition conjugate() const;

  /// `cell` must be an inner corner.
  Partition without(Cell cell) const;
  /// `cell` must be an outer corner.
  Partition with(Cell cell) const;

  /// True when every row has the same length (a rectangular grid).
  bool is_canonical() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::string to_string(const Partition& shape);

/// The cells of `outer` that are not in `inner`.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}
  /// Throws DomainError unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  bool is_normal() const { return inner_.empty(); }
  int cell_count() const { return outer_.size() - inner_.size(); }
  bool contains(Cell cell) const {
    return outer_.contains(cell) && !inner_.contains(cell);
  }
  /// Cells in row-major order.
  std::vector<Cell> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

std::string to_string(const SkewShape& shape);

/// Hook length of every cell, row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& shape);

/// Number of standard Young tableaux of the shape, n! / product of hooks.
BigInt count_syt(const Partition& shape);

BigInt factorial(int n);

/// Removable cells, lexicographically ordered.
std::vector<Cell> inner_corners(const Partition& shape);
/// Addable cells, lexicographically ordered.
std::vector<Cell> outer_corners(const Partition& shape);

/// Every partition of n in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

struct SumOfSquares {
  BigInt sum_of_squares;
  BigInt factorial;
  bool equal = false;
};

/// Sum of count_syt(shape)^2 over all shapes of n, against n!.
SumOfSquares verify_sum_squares(int n);

}  // namespace taquin
