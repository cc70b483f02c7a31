#include "taquin/tableaux.hpp"

#include <algorithm>
#include <set>

#include "taquin/error.hpp"

namespace taquin {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const Partition& outer = shape_.outer();
  if (static_cast<int>(rows_.size()) != outer.rows()) {
    throw StructuralError("tableau has " + std::to_string(rows_.size()) +
                          " rows but shape " + to_string(shape_) + " has " +
                          std::to_string(outer.rows()));
  }
  std::set<int> seen;
  for (int i = 1; i <= outer.rows(); ++i) {
    const auto& row = rows_[i - 1];
    if (static_cast<int>(row.size()) != outer.row_length(i)) {
      throw StructuralError("row " + std::to_string(i) + " has length " +
                            std::to_string(row.size()) + ", shape " +
                            to_string(shape_) + " expects " +
                            std::to_string(outer.row_length(i)));
    }
    for (int j = 1; j <= outer.row_length(i); ++j) {
      const int v = row[j - 1];
      if (shape_.inner().contains({i, j})) {
        if (v != kEmpty) {
          throw StructuralError("entry " + std::to_string(v) + " at " +
                                to_string(Cell{i, j}) +
                                " lies inside the inner shape");
        }
        continue;
      }
      if (v <= 0) {
        throw StructuralError("cell " + to_string(Cell{i, j}) +
                              " needs a positive entry");
      }
      if (!seen.insert(v).second) {
        throw StructuralError("entry " + std::to_string(v) + " repeats");
      }
    }
  }
}

Tableau Tableau::normal(std::vector<std::vector<int>> rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) lengths.push_back(static_cast<int>(row.size()));
  Partition outer;
  try {
    outer = Partition(std::move(lengths));
  } catch (const DomainError& e) {
    throw StructuralError(std::string("row lengths do not form a partition: ") +
                          e.what());
  }
  return Tableau(SkewShape(std::move(outer)), std::move(rows));
}

int Tableau::at(Cell cell) const {
  if (!shape_.outer().contains(cell)) return kEmpty;
  return rows_[cell.row - 1][cell.col - 1];
}

std::optional<Cell> Tableau::find(int entry) const {
  if (entry == kEmpty) return std::nullopt;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] == entry) {
        return Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
      }
    }
  }
  return std::nullopt;
}

std::string to_string(const Tableau& t) {
  std::string s;
  for (const auto& row : t.rows()) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ",";
      s += row[j] == Tableau::kEmpty ? std::string(".") : std::to_string(row[j]);
    }
    s += "]";
  }
  return s.empty() ? "[]" : s;
}

const char* to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::kGeneralized: return "generalized";
    case Ordering::kPartial: return "partial";
    case Ordering::kStandard: return "standard";
  }
  return "?";
}

const char* to_string(ShapeKind kind) {
  return kind == ShapeKind::kNormal ? "normal" : "skew";
}

bool is_partial(const Tableau& t) {
  const SkewShape& shape = t.shape();
  for (const Cell& c : shape.cells()) {
    const int v = t.at(c);
    const Cell right{c.row, c.col + 1};
    const Cell below{c.row + 1, c.col};
    if (shape.contains(right) && t.at(right) <= v) return false;
    if (shape.contains(below) && t.at(below) <= v) return false;
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_partial(t)) return false;
  // Entries are distinct and positive, so max == n means exactly 1..n.
  int max_entry = 0;
  for (const auto& row : t.rows()) {
    for (int v : row) max_entry = std::max(max_entry, v);
  }
  return max_entry == t.cell_count();
}

Classification validate(const Tableau& t) {
  Classification c;
  c.kind = t.is_normal() ? ShapeKind::kNormal : ShapeKind::kSkew;
  if (is_standard(t)) {
    c.ordering = Ordering::kStandard;
  } else if (is_partial(t)) {
    c.ordering = Ordering::kPartial;
  }
  return c;
}

namespace {

void require_normal_partial(const Tableau& p, const char* op) {
  if (!p.is_normal()) {
    throw DomainError(std::string(op) + " needs a tableau of normal shape");
  }
  if (!is_partial(p)) {
    throw DomainError(std::string(op) + " needs a partial tableau, got " +
                      to_string(p));
  }
}

}  // namespace

InsertResult row_insert(const Tableau& p, int x) {
  require_normal_partial(p, "row_insert");
  if (x <= 0) throw DomainError("row_insert needs a positive entry");
  if (p.find(x)) {
    throw DomainError("entry " + std::to_string(x) + " is already present");
  }
  auto rows = p.rows();
  Cell added;
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) {
      rows.push_back({x});
      added = {static_cast<int>(i) + 1, 1};
      break;
    }
    auto& row = rows[i];
    auto bumped = std::upper_bound(row.begin(), row.end(), x);
    if (bumped == row.end()) {
      row.push_back(x);
      added = {static_cast<int>(i) + 1, static_cast<int>(row.size())};
      break;
    }
    std::swap(*bumped, x);
  }
  return {Tableau::normal(std::move(rows)), added};
}

BumpResult reverse_bump(const Tableau& p, Cell cell) {
  require_normal_partial(p, "reverse_bump");
  const Partition& shape = p.shape().outer();
  const auto corners = inner_corners(shape);
  if (std::find(corners.begin(), corners.end(), cell) == corners.end()) {
    throw DomainError(to_string(cell) + " is not an inner corner of " +
                      to_string(shape));
  }
  auto rows = p.rows();
  int x = rows[cell.row - 1].back();
  rows[cell.row - 1].pop_back();
  if (rows[cell.row - 1].empty()) rows.pop_back();
  for (int k = cell.row - 1; k >= 1; --k) {
    auto& row = rows[k - 1];
    // Largest entry of the row smaller than x; the entry directly above the
    // previous position qualifies, so one always exists.
    auto it = std::lower_bound(row.begin(), row.end(), x);
    --it;
    std::swap(*it, x);
  }
  return {Tableau::normal(std::move(rows)), x};
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  word.reserve(t.cell_count());
  for (auto row = t.rows().rbegin(); row != t.rows().rend(); ++row) {
    for (int v : *row) {
      if (v != Tableau::kEmpty) word.push_back(v);
    }
  }
  return word;
}

namespace {

struct SytSearch {
  const SkewShape& shape;
  std::vector<Cell> cells;
  std::vector<std::vector<int>> rows;
  std::vector<bool> used;
  std::vector<Tableau> out;

  void fill(std::size_t index) {
    if (index == cells.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    const Cell c = cells[index];
    int floor = 0;
    const Cell left{c.row, c.col - 1};
    const Cell above{c.row - 1, c.col};
    if (shape.contains(left)) floor = std::max(floor, rows[left.row - 1][left.col - 1]);
    if (shape.contains(above)) floor = std::max(floor, rows[above.row - 1][above.col - 1]);
    const int n = static_cast<int>(cells.size());
    for (int v = floor + 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      rows[c.row - 1][c.col - 1] = v;
      fill(index + 1);
      rows[c.row - 1][c.col - 1] = Tableau::kEmpty;
      used[v] = false;
    }
  }
};

}  // namespace

std::vector<Tableau> enumerate_syt(const SkewShape& shape, int max_cells) {
  if (shape.cell_count() > max_cells) {
    throw ResourceError("enumerate_syt: " + std::to_string(shape.cell_count()) +
                        " cells exceeds the bound of " +
                        std::to_string(max_cells));
  }
  SytSearch search{shape, shape.cells(), {}, {}, {}};
  for (int i = 1; i <= shape.outer().rows(); ++i) {
    search.rows.emplace_back(shape.outer().row_length(i), Tableau::kEmpty);
  }
  search.used.assign(shape.cell_count() + 1, false);
  search.fill(0);
  return std::move(search.out);
}

std::vector<Tableau> enumerate_syt(const Partition& shape, int max_cells) {
  return enumerate_syt(SkewShape(shape), max_cells);
}

}  // namespace taquin
