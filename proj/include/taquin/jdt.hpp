#pragma once

#include <functional>
#include <vector>

#include "taquin/tableaux.hpp"

namespace taquin {

/// One move of a slide: `moved_entry` travels from `from` into `hole`.
struct SlideStep {
  Cell hole;
  int moved_entry = 0;
  Cell from;

  friend bool operator==(const SlideStep&, const SlideStep&) = default;
};

struct SlideResult {
  Tableau tableau;
  Cell vacated;
  std::vector<SlideStep> steps;
};

/// Forward slide into `start`, an inner corner of the inner shape. The hole
/// swaps with the smaller of its right and lower neighbours until it leaves
/// the outer shape at an inner corner, which is reported as `vacated`.
/// Throws DomainError if `start` is not an inner corner of the inner shape or
/// `p` is not a partial tableau.
SlideResult forward_slide(const Tableau& p, Cell start);

/// Backward slide into `start`, an outer corner of the outer shape. The hole
/// swaps with the larger of its left and upper neighbours until it reaches
/// an outer corner of the inner shape.
SlideResult backward_slide(const Tableau& p, Cell start);

/// Chooses which inner corner of the inner shape to slide into next. Called
/// with a non-empty, lexicographically sorted list.
using SlidePolicy = std::function<Cell(const std::vector<Cell>& corners)>;

/// The lexicographically smallest (row, col) corner.
Cell smallest_corner(const std::vector<Cell>& corners);

/// Forward slides until the inner shape is empty.
Tableau rectify(const Tableau& p, const SlidePolicy& policy = smallest_corner);

/// Every slide performed by rectify, in order.
std::vector<SlideResult> rectification_slides(
    const Tableau& p, const SlidePolicy& policy = smallest_corner);

/// True iff both tableaux rectify to the same normal tableau.
bool jdt_equivalent(const Tableau& p1, const Tableau& p2);

}  // namespace taquin
