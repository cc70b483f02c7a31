#include "taquin/partitions.hpp"

#include <algorithm>
#include <functional>

#include "taquin/error.hpp"

namespace taquin {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) {
      throw DomainError("partition parts must be positive");
    }
    if (k > 0 && parts_[k] > parts_[k - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
    size_ += parts_[k];
  }
}

int Partition::row_length(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

bool Partition::contains(Cell cell) const {
  return cell.row >= 1 && cell.col >= 1 && cell.col <= row_length(cell.row);
}

Partition Partition::conjugate() const {
  std::vector<int> columns;
  if (!parts_.empty()) {
    columns.assign(parts_.front(), 0);
    for (int len : parts_) {
      for (int j = 0; j < len; ++j) ++columns[j];
    }
  }
  return Partition(std::move(columns));
}

Partition Partition::without(Cell cell) const {
  if (!contains(cell) || cell.col != row_length(cell.row) ||
      row_length(cell.row + 1) >= cell.col) {
    throw DomainError(to_string(cell) + " is not an inner corner of " +
                      to_string(*this));
  }
  std::vector<int> parts = parts_;
  if (--parts[cell.row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition Partition::with(Cell cell) const {
  bool addable = cell.row >= 1 && cell.row <= rows() + 1 &&
                 cell.col == row_length(cell.row) + 1 &&
                 (cell.row == 1 || row_length(cell.row - 1) >= cell.col);
  if (!addable) {
    throw DomainError(to_string(cell) + " is not an outer corner of " +
                      to_string(*this));
  }
  std::vector<int> parts = parts_;
  if (cell.row > rows()) {
    parts.push_back(1);
  } else {
    ++parts[cell.row - 1];
  }
  return Partition(std::move(parts));
}

bool Partition::is_canonical() const {
  return std::adjacent_find(parts_.begin(), parts_.end(),
                            std::not_equal_to<>()) == parts_.end();
}

std::string to_string(const Partition& shape) {
  std::string s = "(";
  for (std::size_t k = 0; k < shape.parts().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(shape.parts()[k]);
  }
  return s + ")";
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.rows() > outer_.rows()) {
    throw DomainError("inner shape " + to_string(inner_) +
                      " has more rows than outer shape " + to_string(outer_));
  }
  for (int i = 1; i <= inner_.rows(); ++i) {
    if (inner_.row_length(i) > outer_.row_length(i)) {
      throw DomainError("inner shape " + to_string(inner_) +
                        " is not contained in " + to_string(outer_));
    }
  }
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int i = 1; i <= outer_.rows(); ++i) {
    for (int j = inner_.row_length(i) + 1; j <= outer_.row_length(i); ++j) {
      out.push_back({i, j});
    }
  }
  return out;
}

std::string to_string(const SkewShape& shape) {
  if (shape.is_normal()) return to_string(shape.outer());
  return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

std::vector<std::vector<int>> hook_lengths(const Partition& shape) {
  const Partition columns = shape.conjugate();
  std::vector<std::vector<int>> hooks(shape.rows());
  for (int i = 1; i <= shape.rows(); ++i) {
    const int len = shape.row_length(i);
    hooks[i - 1].resize(len);
    for (int j = 1; j <= len; ++j) {
      const int arm = len - j;
      const int leg = columns.row_length(j) - i;
      hooks[i - 1][j - 1] = arm + leg + 1;
    }
  }
  return hooks;
}

BigInt factorial(int n) {
  BigInt result = 1;
  for (int k = 2; k <= n; ++k) result *= k;
  return result;
}

BigInt count_syt(const Partition& shape) {
  BigInt denominator = 1;
  for (const auto& row : hook_lengths(shape)) {
    for (int h : row) denominator *= h;
  }
  return factorial(shape.size()) / denominator;
}

std::vector<Cell> inner_corners(const Partition& shape) {
  std::vector<Cell> corners;
  for (int i = 1; i <= shape.rows(); ++i) {
    if (shape.row_length(i) > shape.row_length(i + 1)) {
      corners.push_back({i, shape.row_length(i)});
    }
  }
  return corners;
}

std::vector<Cell> outer_corners(const Partition& shape) {
  std::vector<Cell> corners;
  for (int i = 1; i <= shape.rows() + 1; ++i) {
    if (i == 1 || shape.row_length(i - 1) > shape.row_length(i)) {
      corners.push_back({i, shape.row_length(i) + 1});
    }
  }
  return corners;
}

namespace {

void extend(int remaining, int max_part, std::vector<int>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    extend(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, prefix, out);
  return out;
}

SumOfSquares verify_sum_squares(int n) {
  if (n < 1) throw DomainError("verify_sum_squares needs n >= 1");
  SumOfSquares result;
  for (const Partition& shape : partitions_of(n)) {
    const BigInt f = count_syt(shape);
    result.sum_of_squares += f * f;
  }
  result.factorial = factorial(n);
  result.equal = result.sum_of_squares == result.factorial;
  return result;
}

}  // namespace taquin
