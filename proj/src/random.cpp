#include "taquin/random.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "taquin/error.hpp"

namespace taquin {

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("TAQUIN_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used);
    if (used == std::string(env).size()) return seed;
  } catch (const std::exception&) {
  }
  throw ParseError(std::string("TAQUIN_SEED is not an unsigned integer: ") + env);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Partition random_partition_in_box(Rng& rng, int rows, int cols) {
  // A partition in the box is a lattice path of `rows` up-steps and `cols`
  // right-steps from the bottom-left corner.
  std::vector<bool> up(rows + cols, false);
  std::fill(up.begin(), up.begin() + rows, true);
  std::shuffle(up.begin(), up.end(), rng);
  std::vector<int> parts(rows, 0);
  int col = 0, row = rows - 1;
  for (bool step : up) {
    if (step) {
      parts[row--] = col;
    } else {
      ++col;
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Tableau random_standard_filling(Rng& rng, const SkewShape& shape) {
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape.outer().rows(); ++i) {
    rows.emplace_back(shape.outer().row_length(i), Tableau::kEmpty);
  }
  auto ready = [&](Cell c) {
    if (!shape.contains(c) || rows[c.row - 1][c.col - 1] != Tableau::kEmpty) return false;
    const Cell left{c.row, c.col - 1}, above{c.row - 1, c.col};
    const bool left_ok = !shape.contains(left) || rows[left.row - 1][left.col - 1] != Tableau::kEmpty;
    const bool above_ok = !shape.contains(above) || rows[above.row - 1][above.col - 1] != Tableau::kEmpty;
    return left_ok && above_ok;
  };
  const auto cells = shape.cells();
  for (int label = 1; label <= shape.cell_count(); ++label) {
    std::vector<Cell> candidates;
    std::copy_if(cells.begin(), cells.end(), std::back_inserter(candidates), ready);
    const Cell pick = candidates[uniform_int(rng, 0, static_cast<int>(candidates.size()) - 1)];
    rows[pick.row - 1][pick.col - 1] = label;
  }
  return Tableau(shape, std::move(rows));
}

HmtState random_normal_assignment(Rng& rng, int max_rows, int max_cols, int min_tasks) {
  if (min_tasks > max_rows * max_cols) {
    throw DomainError("a " + std::to_string(max_rows) + "x" + std::to_string(max_cols) +
                      " grid cannot hold " + std::to_string(min_tasks) + " tasks");
  }
  for (;;) {
    const int rows = uniform_int(rng, 1, max_rows);
    const int cols = uniform_int(rng, 1, max_cols);
    if (rows * cols < min_tasks) continue;
    const Partition shape = random_partition_in_box(rng, rows, cols);
    if (shape.size() < std::max(min_tasks, 1)) continue;
    return HmtState::embed(random_standard_filling(rng, SkewShape(shape)), rows, cols);
  }
}

HmtState random_skew_assignment(Rng& rng, int max_rows, int max_cols) {
  if (max_rows * max_cols < 2) throw DomainError("a skew assignment needs two cells");
  for (;;) {
    const int rows = uniform_int(rng, 1, max_rows);
    const int cols = uniform_int(rng, 1, max_cols);
    const Partition outer = random_partition_in_box(rng, rows, cols);
    const Partition box = random_partition_in_box(rng, rows, cols);
    std::vector<int> inner_parts;
    for (int i = 1; i <= box.rows(); ++i) {
      const int part = std::min(box.row_length(i), outer.row_length(i));
      if (part == 0) break;
      inner_parts.push_back(part);
    }
    const Partition inner(std::move(inner_parts));
    if (inner.empty() || inner.size() == outer.size()) continue;
    const SkewShape shape(outer, inner);
    return HmtState::embed(random_standard_filling(rng, shape), rows, cols);
  }
}

namespace {

Rational random_fraction(Rng& rng, int max_num, int max_den) {
  return Rational(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
}

}  // namespace

CapacityGrid random_capacity_grid(Rng& rng, const Partition& shape) {
  const int rows = shape.rows();
  const int cols = shape.row_length(1);
  std::vector<std::vector<Rational>> rates(rows, std::vector<Rational>(cols));
  for (int i = rows - 1; i >= 0; --i) {
    for (int j = cols - 1; j >= 0; --j) {
      Rational floor = 0;
      if (i + 1 < rows) floor = std::max(floor, rates[i + 1][j]);
      if (j + 1 < cols) floor = std::max(floor, rates[i][j + 1]);
      rates[i][j] = floor + random_fraction(rng, 9, 9);
    }
  }
  return CapacityGrid(shape, std::move(rates));
}

TaskSet random_requirements(Rng& rng, int tasks, bool priority_ordered) {
  std::vector<Rational> r(tasks);
  Rational floor = 0;
  for (int k = tasks - 1; k >= 0; --k) {
    r[k] = random_fraction(rng, 20, 5);
    if (priority_ordered) {
      r[k] += floor;
      floor = r[k];
    }
  }
  return TaskSet(std::move(r));
}

}  // namespace taquin
