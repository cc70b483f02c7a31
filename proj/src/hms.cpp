#include "taquin/hms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "taquin/error.hpp"

namespace taquin {

std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den)) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  const BigInt q(std::string{den});
  if (q == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  return Rational(BigInt(std::string{num}), q);
}

CapacityGrid::CapacityGrid(Partition shape,
                           std::vector<std::vector<Rational>> rates)
    : shape_(std::move(shape)), rates_(std::move(rates)) {
  if (!shape_.is_canonical()) {
    throw DomainError("capacity grid needs a canonical shape, got " +
                      to_string(shape_));
  }
  if (static_cast<int>(rates_.size()) != shape_.rows()) {
    throw DomainError("capacity grid has the wrong number of rows for " +
                      to_string(shape_));
  }
  for (int i = 1; i <= shape_.rows(); ++i) {
    if (static_cast<int>(rates_[i - 1].size()) != shape_.row_length(i)) {
      throw DomainError("capacity row " + std::to_string(i) +
                        " does not match " + to_string(shape_));
    }
    for (int j = 1; j <= shape_.row_length(i); ++j) {
      const Rational& c = rates_[i - 1][j - 1];
      if (c <= 0) {
        throw DomainError("capacity at " + to_string(Cell{i, j}) +
                          " must be positive");
      }
      if (i > 1 && !(rates_[i - 2][j - 1] > c)) {
        throw DomainError("capacity must strictly decrease downward at " +
                          to_string(Cell{i, j}));
      }
      if (j > 1 && !(rates_[i - 1][j - 2] > c)) {
        throw DomainError("capacity must strictly decrease rightward at " +
                          to_string(Cell{i, j}));
      }
    }
  }
}

const Rational& CapacityGrid::at(Cell cell) const {
  if (!shape_.contains(cell)) {
    throw DomainError("no capacity for " + to_string(cell));
  }
  return rates_[cell.row - 1][cell.col - 1];
}

CapacityGrid default_capacity_grid(const Partition& shape) {
  if (!shape.is_canonical()) {
    throw DomainError("default capacities need a canonical shape, got " +
                      to_string(shape));
  }
  std::vector<std::vector<Rational>> rates(shape.rows());
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      rates[i - 1].emplace_back(BigInt(1), BigInt(1) << (i + j - 2));
    }
  }
  return CapacityGrid(shape, std::move(rates));
}

TaskSet::TaskSet(std::vector<Rational> requirements)
    : requirements_(std::move(requirements)) {
  for (std::size_t k = 0; k < requirements_.size(); ++k) {
    if (requirements_[k] <= 0) {
      throw DomainError("requirement of task " + std::to_string(k + 1) +
                        " must be positive");
    }
  }
}

const Rational& TaskSet::requirement(TaskId task) const {
  if (task < 1 || task > size()) {
    throw DomainError("no requirement for task " + std::to_string(task));
  }
  return requirements_[task - 1];
}

bool TaskSet::is_priority_ordered() const {
  return std::adjacent_find(requirements_.begin(), requirements_.end(),
                            [](const Rational& a, const Rational& b) {
                              return !(a > b);
                            }) == requirements_.end();
}

HmtState::HmtState(Partition shape, std::vector<std::vector<TaskId>> cells,
                   std::optional<CapacityGrid> capacities)
    : shape_(std::move(shape)),
      cells_(std::move(cells)),
      capacities_(std::move(capacities)) {
  if (shape_.empty() || !shape_.is_canonical()) {
    throw DomainError("processor grid needs a non-empty canonical shape, got " +
                      to_string(shape_));
  }
  if (capacities_ && capacities_->shape() != shape_) {
    throw DomainError("capacities cover " + to_string(capacities_->shape()) +
                      " but the grid is " + to_string(shape_));
  }
  if (static_cast<int>(cells_.size()) != shape_.rows()) {
    throw StructuralError("grid has " + std::to_string(cells_.size()) +
                          " rows, shape " + to_string(shape_) + " needs " +
                          std::to_string(shape_.rows()));
  }
  std::set<TaskId> seen;
  for (int i = 1; i <= shape_.rows(); ++i) {
    if (static_cast<int>(cells_[i - 1].size()) != shape_.row_length(i)) {
      throw StructuralError("grid row " + std::to_string(i) +
                            " does not match shape " + to_string(shape_));
    }
    for (TaskId t : cells_[i - 1]) {
      if (t == kIdle) continue;
      if (t < 0) throw StructuralError("task IDs must be positive");
      if (!seen.insert(t).second) {
        throw StructuralError("task " + std::to_string(t) + " appears twice");
      }
    }
  }
}

HmtState HmtState::embed(const Tableau& t, int rows, int cols) {
  const Partition& outer = t.shape().outer();
  if (outer.rows() > rows || outer.row_length(1) > cols) {
    throw DomainError("tableau of shape " + to_string(t.shape()) +
                      " does not fit a " + std::to_string(rows) + "x" +
                      std::to_string(cols) + " grid");
  }
  std::vector<std::vector<TaskId>> cells(rows, std::vector<TaskId>(cols, kIdle));
  for (int i = 0; i < outer.rows(); ++i) {
    std::copy(t.rows()[i].begin(), t.rows()[i].end(), cells[i].begin());
  }
  return HmtState(Partition(std::vector<int>(rows, cols)), std::move(cells));
}

TaskId HmtState::at(Cell cell) const {
  if (!in_grid(cell)) return kIdle;
  return cells_[cell.row - 1][cell.col - 1];
}

std::optional<Cell> HmtState::find(TaskId task) const {
  if (task == kIdle) return std::nullopt;
  for (int i = 1; i <= grid_rows(); ++i) {
    for (int j = 1; j <= grid_cols(); ++j) {
      if (cells_[i - 1][j - 1] == task) return Cell{i, j};
    }
  }
  return std::nullopt;
}

int HmtState::task_count() const {
  int n = 0;
  for (const auto& row : cells_) {
    n += static_cast<int>(std::count_if(row.begin(), row.end(),
                                        [](TaskId t) { return t != kIdle; }));
  }
  return n;
}

HmtState HmtState::with_cells(std::vector<std::vector<TaskId>> cells) const {
  return HmtState(shape_, std::move(cells), capacities_);
}

std::string to_string(const HmtState& state) {
  std::string s;
  for (const auto& row : state.cells()) {
    s += "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ",";
      s += row[j] == HmtState::kIdle ? std::string(".") : std::to_string(row[j]);
    }
    s += "]";
  }
  return s;
}

namespace {

// Finds (outer, inner) with outer/inner equal to the marked cells of a
// row-major boolean grid, or nullopt when no skew shape has that cell set.
std::optional<SkewShape> skew_shape_from(
    const std::vector<std::vector<bool>>& marked) {
  const int rows = static_cast<int>(marked.size());
  std::vector<int> outer(rows, 0), inner(rows, 0);
  std::vector<bool> blank(rows, true);
  for (int i = 0; i < rows; ++i) {
    const auto& row = marked[i];
    const int cols = static_cast<int>(row.size());
    int first = -1, last = -1;
    for (int j = 0; j < cols; ++j) {
      if (!row[j]) continue;
      if (first < 0) first = j;
      else if (last != j - 1) return std::nullopt;  // gap inside the row
      last = j;
    }
    if (first >= 0) {
      blank[i] = false;
      inner[i] = first;
      outer[i] = last + 1;
    }
  }
  // A blank row sits at the boundary: outer == inner == the outer length of
  // the row below (0 at the bottom).
  int below = 0;
  for (int i = rows - 1; i >= 0; --i) {
    if (blank[i]) outer[i] = inner[i] = below;
    below = outer[i];
  }
  for (int i = 1; i < rows; ++i) {
    if (outer[i] > outer[i - 1] || inner[i] > inner[i - 1]) return std::nullopt;
  }
  auto trim = [](std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
  };
  const auto outer_parts = trim(outer);
  const auto inner_parts = trim(inner);
  // Zero parts above a positive one cannot survive the monotonicity check.
  return SkewShape(Partition(outer_parts), Partition(inner_parts));
}

}  // namespace

Embedding maximally_embedded(const HmtState& state) {
  std::vector<std::vector<bool>> marked;
  for (const auto& row : state.cells()) {
    std::vector<bool> m;
    for (TaskId t : row) m.push_back(t != HmtState::kIdle);
    marked.push_back(std::move(m));
  }
  auto shape = skew_shape_from(marked);
  if (!shape) {
    throw InvalidStateError("busy cells of " + to_string(state) +
                            " do not form a skew shape");
  }
  std::vector<std::vector<int>> rows;
  for (int i = 1; i <= shape->outer().rows(); ++i) {
    std::vector<int> row(shape->outer().row_length(i), Tableau::kEmpty);
    for (int j = shape->inner().row_length(i) + 1; j <= shape->outer().row_length(i); ++j) {
      row[j - 1] = state.at({i, j});
    }
    rows.push_back(std::move(row));
  }
  Tableau tableau(*shape, std::move(rows));
  return {std::move(*shape), std::move(tableau)};
}

bool is_valid(const HmtState& state) {
  try {
    maximally_embedded(state);
    return true;
  } catch (const InvalidStateError&) {
    return false;
  }
}

bool is_standard(const HmtState& state) {
  return is_valid(state) && descent_pairs(state).empty();
}

bool is_normal_shape(const HmtState& state) {
  return is_valid(state) && maximally_embedded(state).shape.is_normal();
}

std::vector<CellPair> descent_pairs(const HmtState& state) {
  std::vector<CellPair> pairs;
  for (int i = 1; i <= state.grid_rows(); ++i) {
    for (int j = 1; j <= state.grid_cols(); ++j) {
      const TaskId t = state.at({i, j});
      if (t == HmtState::kIdle) continue;
      for (const Cell next : {Cell{i, j + 1}, Cell{i + 1, j}}) {
        const TaskId u = state.at(next);
        if (u != HmtState::kIdle && u < t) pairs.push_back({{i, j}, next});
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

// Greedy relocation from an idle cell: the higher-priority (smaller ID)
// busy neighbour to the right or below moves in, until neither is busy.
std::vector<Relocation> cascade(std::vector<std::vector<TaskId>>& cells,
                                const HmtState& grid, Cell hole) {
  auto busy = [&](Cell c) {
    return grid.in_grid(c) && cells[c.row - 1][c.col - 1] != HmtState::kIdle;
  };
  auto task = [&](Cell c) -> TaskId& { return cells[c.row - 1][c.col - 1]; };
  std::vector<Relocation> moves;
  for (;;) {
    const Cell right{hole.row, hole.col + 1};
    const Cell below{hole.row + 1, hole.col};
    const bool r = busy(right), b = busy(below);
    if (!r && !b) break;
    const Cell next = (r && b) ? (task(right) < task(below) ? right : below)
                               : (r ? right : below);
    moves.push_back({task(next), next, hole});
    task(hole) = task(next);
    task(next) = HmtState::kIdle;
    hole = next;
  }
  return moves;
}

}  // namespace

CompletionResult reassign_on_completion(const HmtState& state, TaskId task) {
  const auto cell = state.find(task);
  if (!cell) {
    throw DomainError("task " + std::to_string(task) + " is not running in " +
                      to_string(state));
  }
  if (!is_standard(state) || !is_normal_shape(state)) {
    throw DomainError("completion-driven reassignment needs a standard state "
                      "of normal shape, got " + to_string(state));
  }
  auto cells = state.cells();
  cells[cell->row - 1][cell->col - 1] = HmtState::kIdle;
  auto moves = cascade(cells, state, *cell);
  return {state.with_cells(std::move(cells)), std::move(moves)};
}

ReassignmentTrace reassignment_sequence(const HmtState& a0,
                                        const std::vector<TaskId>& completions) {
  ReassignmentTrace trace{a0, {}};
  const int m = a0.task_count();
  for (std::size_t k = 0; k < completions.size(); ++k) {
    const HmtState& current = trace.final_state();
    const TaskId task = completions[k];
    if (!current.find(task)) {
      throw DomainError("completion " + std::to_string(k + 1) + " names task " +
                        std::to_string(task) + ", which is not running");
    }
    if (static_cast<int>(k) == m - 1) {
      trace.events.push_back({CompletionTrigger{task}, {}, current, true});
      continue;
    }
    auto [state, moves] = reassign_on_completion(current, task);
    trace.events.push_back(
        {CompletionTrigger{task}, std::move(moves), std::move(state), false});
  }
  return trace;
}

ReassignmentTrace rectify_assignment(const HmtState& a0,
                                     const SlidePolicy& policy) {
  if (!is_standard(a0)) {
    throw DomainError("rectification needs a standard state, got " +
                      to_string(a0));
  }
  ReassignmentTrace trace{a0, {}};
  for (;;) {
    const HmtState& current = trace.final_state();
    const Embedding embedded = maximally_embedded(current);
    if (embedded.shape.is_normal()) break;
    const auto corners = inner_corners(embedded.shape.inner());
    const Cell corner = policy(corners);
    if (std::find(corners.begin(), corners.end(), corner) == corners.end()) {
      throw DomainError("slide policy chose " + to_string(corner) +
                        ", not an inner corner");
    }
    auto cells = current.cells();
    auto moves = cascade(cells, current, corner);
    trace.events.push_back({RectifyTrigger{corner}, std::move(moves),
                            current.with_cells(std::move(cells)), false});
  }
  return trace;
}

HmtState naive_slide_up(const HmtState& a0) {
  std::vector<std::vector<TaskId>> cells(
      a0.grid_rows(), std::vector<TaskId>(a0.grid_cols(), HmtState::kIdle));
  for (int j = 1; j <= a0.grid_cols(); ++j) {
    int top = 0;
    for (int i = 1; i <= a0.grid_rows(); ++i) {
      const TaskId t = a0.at({i, j});
      if (t != HmtState::kIdle) cells[top++][j - 1] = t;
    }
  }
  return a0.with_cells(std::move(cells));
}

bool reassignment_equivalent(const HmtState& s1, const HmtState& s2) {
  if (s1.shape() != s2.shape()) {
    throw DomainError("grids " + to_string(s1.shape()) + " and " +
                      to_string(s2.shape()) + " differ");
  }
  return rectify_assignment(s1).final_state().cells() ==
         rectify_assignment(s2).final_state().cells();
}

Rational assignment_cost(const HmtState& state, const TaskSet& tasks,
                         const CapacityGrid& caps) {
  Rational total = 0;
  for (int i = 1; i <= state.grid_rows(); ++i) {
    for (int j = 1; j <= state.grid_cols(); ++j) {
      const TaskId t = state.at({i, j});
      if (t != HmtState::kIdle) total += tasks.requirement(t) / caps.at({i, j});
    }
  }
  return total;
}

Turnaround turnaround_sequential(const HmtState& a0, const TaskSet& tasks,
                                 const CapacityGrid& caps, bool relocate) {
  if (caps.shape() != a0.shape()) {
    throw DomainError("capacities cover " + to_string(caps.shape()) +
                      " but the grid is " + to_string(a0.shape()));
  }
  const int m = a0.task_count();
  if (tasks.size() != m) {
    throw DomainError(std::to_string(m) + " tasks are placed but " +
                      std::to_string(tasks.size()) + " requirements given");
  }
  for (TaskId t = 1; t <= m; ++t) {
    if (!a0.find(t)) {
      throw DomainError("sequential tasks must be 1.." + std::to_string(m) +
                        "; task " + std::to_string(t) + " is missing");
    }
  }

  Turnaround result;
  HmtState state = a0;
  for (TaskId t = 1; t <= m; ++t) {
    const Cell cell = *state.find(t);
    Rational duration = tasks.requirement(t) / caps.at(cell);
    result.total += duration;
    result.per_task.push_back({t, cell, std::move(duration)});
    if (relocate && t < m) state = reassign_on_completion(state, t).state;
  }
  return result;
}

MeshGraph mesh_graph(const SkewShape& shape, bool directed) {
  MeshGraph graph;
  graph.directed = directed;
  graph.vertices = shape.cells();
  for (const Cell& c : graph.vertices) {
    for (const Cell next : {Cell{c.row, c.col + 1}, Cell{c.row + 1, c.col}}) {
      if (shape.contains(next)) graph.edges.emplace_back(c, next);
    }
  }
  return graph;
}

SkewShape skew_shape_of(const MeshGraph& graph) {
  int rows = 0, cols = 0;
  for (const Cell& c : graph.vertices) {
    if (c.row < 1 || c.col < 1) {
      throw InvalidStateError("vertex " + to_string(c) + " is not a cell");
    }
    rows = std::max(rows, c.row);
    cols = std::max(cols, c.col);
  }
  std::vector<std::vector<bool>> marked(rows, std::vector<bool>(cols, false));
  for (const Cell& c : graph.vertices) marked[c.row - 1][c.col - 1] = true;
  auto shape = skew_shape_from(marked);
  if (!shape) throw InvalidStateError("mesh graph vertices are not a skew shape");
  return *shape;
}

BigInt count_standard_labelings(const MeshGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  if (n > kMaxLabelingVertices) {
    throw ResourceError("labeling count is limited to " +
                        std::to_string(kMaxLabelingVertices) + " vertices");
  }
  std::vector<std::uint32_t> predecessors(n, 0);
  for (const auto& [from, to] : graph.edges) {
    const auto index = [&](Cell c) {
      return static_cast<int>(std::find(graph.vertices.begin(),
                                        graph.vertices.end(), c) -
                              graph.vertices.begin());
    };
    const int a = index(from), b = index(to);
    if (a == n || b == n) throw DomainError("edge endpoint is not a vertex");
    predecessors[b] |= 1u << a;
  }
  // ways[S]: labelings of S by 1..|S| that respect every edge inside S,
  // where S is closed under predecessors.
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    if (ways[set] == 0) continue;
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((set & bit) == 0 && (predecessors[v] & ~set) == 0) {
        ways[set | bit] += ways[set];
      }
    }
  }
  return BigInt(ways[(std::size_t{1} << n) - 1]);
}

}  // namespace taquin
