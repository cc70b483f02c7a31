#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "taquin/jdt.hpp"
#include "taquin/partitions.hpp"
#include "taquin/tableaux.hpp"

namespace taquin {

// Hierarchical 2D mesh systems: a rectangular grid of processors whose
// execution rates strictly decrease along rows and down columns, with task
// IDs (lower ID = higher priority) placed on the processors.

using Rational = boost::multiprecision::cpp_rational;
using TaskId = int;

/// "p/q" in lowest terms, always with an explicit denominator.
std::string to_string(const Rational& r);
/// Accepts "p/q" or "p"; throws ParseError otherwise and for q == 0.
Rational parse_rational(std::string_view text);

/// Execution rate of every processor of a canonical (rectangular) grid.
class CapacityGrid {
 public:
  /// Throws DomainError unless the shape is canonical, the rates match it,
  /// are positive, and strictly decrease to the right and downward.
  CapacityGrid(Partition shape, std::vector<std::vector<Rational>> rates);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<Rational>>& rates() const { return rates_; }
  const Rational& at(Cell cell) const;

  friend bool operator==(const CapacityGrid&, const CapacityGrid&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<Rational>> rates_;
};

/// c(i,j) = 2^-(i+j-2).
CapacityGrid default_capacity_grid(const Partition& shape);

/// Resource requirement r(i) of tasks 1..m.
class TaskSet {
 public:
  /// requirements[i-1] is r(i); throws DomainError unless all positive.
  explicit TaskSet(std::vector<Rational> requirements);

  int size() const { return static_cast<int>(requirements_.size()); }
  /// Throws DomainError for IDs outside 1..m.
  const Rational& requirement(TaskId task) const;
  const std::vector<Rational>& requirements() const { return requirements_; }

  /// True when a higher priority (lower ID) always means a strictly larger
  /// requirement, as the sequential application assumes.
  bool is_priority_ordered() const;

 private:
  std::vector<Rational> requirements_;
};

/// A canonical processor grid with an optional task on each cell.
class HmtState {
 public:
  static constexpr TaskId kIdle = 0;

  /// Throws DomainError if the shape is not canonical or the capacities
  /// cover another shape; StructuralError if the grid does not match the
  /// shape or a task ID is non-positive or repeated.
  HmtState(Partition shape, std::vector<std::vector<TaskId>> cells,
           std::optional<CapacityGrid> capacities = std::nullopt);

  /// Places a normal or skew tableau on the top-left of a rows x cols grid.
  static HmtState embed(const Tableau& t, int rows, int cols);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<TaskId>>& cells() const { return cells_; }
  const std::optional<CapacityGrid>& capacities() const { return capacities_; }

  int grid_rows() const { return shape_.rows(); }
  int grid_cols() const { return shape_.row_length(1); }
  bool in_grid(Cell c) const { return shape_.contains(c); }

  /// Task on `cell`, kIdle when idle or outside the grid.
  TaskId at(Cell cell) const;
  std::optional<Cell> find(TaskId task) const;
  int task_count() const;

  /// Same grid and capacities, new occupancy.
  HmtState with_cells(std::vector<std::vector<TaskId>> cells) const;

  friend bool operator==(const HmtState&, const HmtState&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<TaskId>> cells_;
  std::optional<CapacityGrid> capacities_;
};

std::string to_string(const HmtState& state);

struct Embedding {
  SkewShape shape;
  Tableau tableau;
};

/// The tableau formed by the busy cells. Rows without busy cells take the
/// smallest admissible position, so every inner corner of the inner shape
/// borders a busy cell. Throws InvalidStateError when the busy cells do not
/// form a skew shape.
Embedding maximally_embedded(const HmtState& state);

bool is_valid(const HmtState& state);
/// Valid with rows and columns of task IDs strictly increasing.
bool is_standard(const HmtState& state);
/// Valid with a normal (top-left justified) embedded shape.
bool is_normal_shape(const HmtState& state);

struct CellPair {
  Cell first;
  Cell second;

  friend auto operator<=>(const CellPair&, const CellPair&) = default;
};

/// Adjacent busy pairs where the right or lower task has the smaller ID.
std::vector<CellPair> descent_pairs(const HmtState& state);

struct Relocation {
  TaskId task = 0;
  Cell from;
  Cell to;

  friend bool operator==(const Relocation&, const Relocation&) = default;
};

struct CompletionResult {
  HmtState state;
  std::vector<Relocation> relocations;
};

/// Vacates the processor of `task` and greedily pulls the higher-priority
/// of the right and lower neighbours into the idle cell until neither is
/// busy. Needs a standard state of normal shape; throws DomainError if the
/// task is absent or the state does not qualify.
CompletionResult reassign_on_completion(const HmtState& state, TaskId task);

struct CompletionTrigger {
  TaskId task = 0;
  friend bool operator==(const CompletionTrigger&,
                         const CompletionTrigger&) = default;
};
struct RectifyTrigger {
  Cell corner;
  friend bool operator==(const RectifyTrigger&,
                         const RectifyTrigger&) = default;
};
using Trigger = std::variant<CompletionTrigger, RectifyTrigger>;

struct TraceEvent {
  Trigger trigger;
  std::vector<Relocation> relocations;
  HmtState state;
  /// Set on the completion of the last remaining task, which triggers no
  /// reassignment.
  bool noop = false;
};

struct ReassignmentTrace {
  HmtState initial;
  std::vector<TraceEvent> events;

  const HmtState& final_state() const {
    return events.empty() ? initial : events.back().state;
  }
};

/// Runs the completion-driven reassignment for each entry of `completions`,
/// which must name distinct busy tasks. When the sequence names every task,
/// the last one is recorded as a no-op event.
ReassignmentTrace reassignment_sequence(const HmtState& a0,
                                        const std::vector<TaskId>& completions);

/// Moves a standard skew-shape assignment to normal shape, one greedy
/// cascade per idle cell of the inner shape, starting each cascade at the
/// corner chosen by `policy`. Throws DomainError if `a0` is not standard.
ReassignmentTrace rectify_assignment(
    const HmtState& a0, const SlidePolicy& policy = smallest_corner);

/// Baseline: every column's busy cells slide to the top of that column,
/// keeping their order.
HmtState naive_slide_up(const HmtState& a0);

/// True iff both assignments rectify to the same occupancy. Throws
/// DomainError if the grids differ or either state is not standard.
bool reassignment_equivalent(const HmtState& s1, const HmtState& s2);

/// Sum over busy cells of r(task) / c(cell).
Rational assignment_cost(const HmtState& state, const TaskSet& tasks,
                         const CapacityGrid& caps);

struct TaskRun {
  TaskId task = 0;
  Cell cell;
  Rational duration;
};

struct Turnaround {
  Rational total;
  std::vector<TaskRun> per_task;
};

/// Turnaround of tasks 1..m executed one after another in ID order. With
/// `relocate`, the completion-driven reassignment runs after each task and
/// every task runs on the cell it holds when it starts.
Turnaround turnaround_sequential(const HmtState& a0, const TaskSet& tasks,
                                 const CapacityGrid& caps, bool relocate);

struct MeshGraph {
  std::vector<Cell> vertices;
  /// Horizontal edges point right, vertical edges point down.
  std::vector<std::pair<Cell, Cell>> edges;
  bool directed = false;
};

MeshGraph mesh_graph(const SkewShape& shape, bool directed);

/// Recovers the skew shape a mesh graph was built from (smallest
/// representation of its cell set). Throws InvalidStateError otherwise.
SkewShape skew_shape_of(const MeshGraph& graph);

inline constexpr int kMaxLabelingVertices = 20;

/// Number of bijective labelings 1..n that increase along every edge.
/// Throws ResourceError past kMaxLabelingVertices.
BigInt count_standard_labelings(const MeshGraph& graph);

}  // namespace taquin
