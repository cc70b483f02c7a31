#pragma once

#include <cstdint>
#include <random>

#include "taquin/hms.hpp"

namespace taquin {

// Seeded generators for property runs. Every function draws only from the
// engine passed in, so a seed reproduces an instance exactly.

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20110301;

/// TAQUIN_SEED when set to an unsigned integer, kDefaultSeed otherwise.
std::uint64_t seed_from_environment();

int uniform_int(Rng& rng, int lo, int hi);

/// Uniform over the partitions that fit a rows x cols box.
Partition random_partition_in_box(Rng& rng, int rows, int cols);

/// Uniformly random order of adding cells that keeps rows and columns
/// increasing; gives a standard filling of the skew shape.
Tableau random_standard_filling(Rng& rng, const SkewShape& shape);

/// A standard assignment of normal shape with at least `min_tasks` tasks on a
/// grid of at most max_rows x max_cols (grid large enough for min_tasks).
HmtState random_normal_assignment(Rng& rng, int max_rows, int max_cols,
                                  int min_tasks = 1);

/// A standard assignment whose embedded shape has a non-empty inner part.
HmtState random_skew_assignment(Rng& rng, int max_rows, int max_cols);

/// Random positive rates strictly decreasing to the right and downward.
CapacityGrid random_capacity_grid(Rng& rng, const Partition& shape);

/// Random positive requirements; strictly decreasing in task ID when
/// `priority_ordered`.
TaskSet random_requirements(Rng& rng, int tasks, bool priority_ordered);

}  // namespace taquin
