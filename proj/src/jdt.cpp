#include "taquin/jdt.hpp"

#include <algorithm>
#include <cassert>

#include "taquin/error.hpp"

namespace taquin {

namespace {

int& slot(std::vector<std::vector<int>>& rows, Cell c) {
  return rows[c.row - 1][c.col - 1];
}

void require_partial(const Tableau& p, const char* op) {
  if (!is_partial(p)) {
    throw DomainError(std::string(op) + " needs a partial tableau, got " +
                      to_string(p));
  }
}

}  // namespace

SlideResult forward_slide(const Tableau& p, Cell start) {
  require_partial(p, "forward_slide");
  const Partition& outer = p.shape().outer();
  const Partition& inner = p.shape().inner();
  const auto corners = inner_corners(inner);
  if (std::find(corners.begin(), corners.end(), start) == corners.end()) {
    throw DomainError(to_string(start) + " is not an inner corner of " +
                      to_string(inner));
  }

  auto rows = p.rows();
  std::vector<SlideStep> steps;
  Cell hole = start;
  for (;;) {
    const Cell right{hole.row, hole.col + 1};
    const Cell below{hole.row + 1, hole.col};
    const bool has_right = outer.contains(right);
    const bool has_below = outer.contains(below);
    if (!has_right && !has_below) break;
    Cell next;
    if (has_right && has_below) {
      assert(slot(rows, right) != slot(rows, below));
      next = slot(rows, right) < slot(rows, below) ? right : below;
    } else {
      next = has_right ? right : below;
    }
    steps.push_back({hole, slot(rows, next), next});
    slot(rows, hole) = slot(rows, next);
    slot(rows, next) = Tableau::kEmpty;
    hole = next;
  }

  rows[hole.row - 1].pop_back();
  if (rows[hole.row - 1].empty()) rows.pop_back();
  SkewShape shape(outer.without(hole), inner.without(start));
  return {Tableau(std::move(shape), std::move(rows)), hole, std::move(steps)};
}

SlideResult backward_slide(const Tableau& p, Cell start) {
  require_partial(p, "backward_slide");
  const Partition& outer = p.shape().outer();
  const Partition& inner = p.shape().inner();
  const auto corners = outer_corners(outer);
  if (std::find(corners.begin(), corners.end(), start) == corners.end()) {
    throw DomainError(to_string(start) + " is not an outer corner of " +
                      to_string(outer));
  }

  auto rows = p.rows();
  if (start.row > static_cast<int>(rows.size())) rows.emplace_back();
  rows[start.row - 1].push_back(Tableau::kEmpty);

  auto in_region = [&](Cell c) {
    return c.row >= 1 && c.col >= 1 && !inner.contains(c);
  };
  std::vector<SlideStep> steps;
  Cell hole = start;
  for (;;) {
    const Cell above{hole.row - 1, hole.col};
    const Cell left{hole.row, hole.col - 1};
    const bool has_above = in_region(above);
    const bool has_left = in_region(left);
    if (!has_above && !has_left) break;
    Cell next;
    if (has_above && has_left) {
      assert(slot(rows, above) != slot(rows, left));
      next = slot(rows, above) > slot(rows, left) ? above : left;
    } else {
      next = has_above ? above : left;
    }
    steps.push_back({hole, slot(rows, next), next});
    slot(rows, hole) = slot(rows, next);
    slot(rows, next) = Tableau::kEmpty;
    hole = next;
  }

  SkewShape shape(outer.with(start), inner.with(hole));
  return {Tableau(std::move(shape), std::move(rows)), hole, std::move(steps)};
}

Cell smallest_corner(const std::vector<Cell>& corners) {
  return *std::min_element(corners.begin(), corners.end());
}

std::vector<SlideResult> rectification_slides(const Tableau& p,
                                              const SlidePolicy& policy) {
  require_partial(p, "rectify");
  std::vector<SlideResult> slides;
  const Tableau* current = &p;
  while (!current->is_normal()) {
    const auto corners = inner_corners(current->shape().inner());
    slides.push_back(forward_slide(*current, policy(corners)));
    current = &slides.back().tableau;
  }
  return slides;
}

Tableau rectify(const Tableau& p, const SlidePolicy& policy) {
  require_partial(p, "rectify");
  Tableau current = p;
  while (!current.is_normal()) {
    const auto corners = inner_corners(current.shape().inner());
    current = forward_slide(current, policy(corners)).tableau;
  }
  return current;
}

bool jdt_equivalent(const Tableau& p1, const Tableau& p2) {
  if (p1.cell_count() != p2.cell_count()) return false;
  return rectify(p1) == rectify(p2);
}

}  // namespace taquin
