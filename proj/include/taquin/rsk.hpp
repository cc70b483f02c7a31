#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "taquin/tableaux.hpp"

namespace taquin {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `word` rearranges {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

std::string to_string(const Permutation& pi);

struct RskPair {
  Tableau insertion;  // P
  Tableau recording;  // Q

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

/// Robinson-Schensted: row-insert the word left to right into P, recording
/// the step number k in Q at the cell the k-th insertion added.
RskPair rsk(const Permutation& pi);

/// Insertion tableaux P_0 (empty) through P_n.
std::vector<Tableau> insertion_sequence(const Permutation& pi);

/// Recovers the permutation by reverse-bumping P at the cell of n, n-1, ...
/// in Q. Throws DomainError unless P and Q are standard of one normal shape.
Permutation rsk_inverse(const Tableau& insertion, const Tableau& recording);

/// Every permutation one elementary Knuth transformation away, applied at
/// each window of three consecutive positions:
///   y x z <-> y z x   and   x z y <-> z x y   for x < y < z.
std::set<Permutation> knuth_neighbors(const Permutation& pi);

/// Knuth equivalence decided by comparing insertion tableaux.
/// Throws DomainError when the lengths differ.
bool knuth_equivalent(const Permutation& pi, const Permutation& tau);

inline constexpr int kKnuthOracleMaxLength = 8;

/// Breadth-first closure of knuth_neighbors from `pi`; used as an
/// independent check on knuth_equivalent. Throws ResourceError past length 8.
bool knuth_reachable_oracle(const Permutation& pi, const Permutation& tau);

/// The full Knuth class of `pi` by breadth-first search.
std::set<Permutation> knuth_class(const Permutation& pi);

}  // namespace taquin
