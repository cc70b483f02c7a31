#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taquin/partitions.hpp"

namespace taquin {

/// A filling of a (possibly skew) shape with distinct positive integers.
///
/// Rows are stored row-major; row i holds outer.row_length(i) slots, and the
/// slots covered by the inner shape hold `kEmpty`. Every cell of the skew
/// region holds a positive entry.
class Tableau {
 public:
  static constexpr int kEmpty = 0;

  Tableau() = default;

  /// Throws StructuralError if the rows do not match the shape, a skew cell
  /// is empty, an inner cell is filled, or an entry repeats.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  /// Normal-shape tableau from its rows; the row lengths must form a
  /// partition.
  static Tableau normal(std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int cell_count() const { return shape_.cell_count(); }
  bool is_normal() const { return shape_.is_normal(); }

  /// Entry at `cell`, or kEmpty for cells outside the skew region.
  int at(Cell cell) const;
  std::optional<Cell> find(int entry) const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

std::string to_string(const Tableau& t);

enum class Ordering { kGeneralized, kPartial, kStandard };
enum class ShapeKind { kNormal, kSkew };

struct Classification {
  Ordering ordering = Ordering::kGeneralized;
  ShapeKind kind = ShapeKind::kNormal;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

const char* to_string(Ordering ordering);
const char* to_string(ShapeKind kind);

/// Strongest class the tableau belongs to: standard (partial with entries
/// exactly 1..n), partial (rows and columns strictly increase), or
/// generalized.
Classification validate(const Tableau& t);

bool is_partial(const Tableau& t);
bool is_standard(const Tableau& t);

struct InsertResult {
  Tableau tableau;
  Cell added;
};

/// Row-inserts `x` into a normal-shape partial tableau.
/// Throws DomainError if `x` is already present or `p` is skew.
InsertResult row_insert(const Tableau& p, int x);

struct BumpResult {
  Tableau tableau;
  int entry = 0;
};

/// Removes the entry at inner corner `cell` and bumps it back up to row 1.
/// Inverse of row_insert. Throws DomainError if `cell` is not an inner
/// corner.
BumpResult reverse_bump(const Tableau& p, Cell cell);

/// Rows from bottom to top, each left to right, skipping empty cells.
std::vector<int> reading_word(const Tableau& t);

inline constexpr int kDefaultEnumerationBound = 12;

/// All standard tableaux of the shape, filled cell by cell in row-major
/// order with candidates tried in ascending order.
/// Throws ResourceError past `max_cells`.
std::vector<Tableau> enumerate_syt(const Partition& shape,
                                   int max_cells = kDefaultEnumerationBound);
std::vector<Tableau> enumerate_syt(const SkewShape& shape,
                                   int max_cells = kDefaultEnumerationBound);

}  // namespace taquin
