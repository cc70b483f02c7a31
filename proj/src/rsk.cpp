#include "taquin/rsk.hpp"

#include <deque>
#include <numeric>

#include "taquin/error.hpp"

namespace taquin {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw DomainError("not a permutation of 1.." + std::to_string(n) + ": " +
                        to_string(*this));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

std::string to_string(const Permutation& pi) {
  std::string s = "[";
  for (std::size_t k = 0; k < pi.word().size(); ++k) {
    if (k) s += " ";
    s += std::to_string(pi.word()[k]);
  }
  return s + "]";
}

RskPair rsk(const Permutation& pi) {
  Tableau p;
  std::vector<std::vector<int>> q_rows;
  int step = 0;
  for (int x : pi.word()) {
    auto [next, added] = row_insert(p, x);
    p = std::move(next);
    ++step;
    if (added.row > static_cast<int>(q_rows.size())) q_rows.emplace_back();
    q_rows[added.row - 1].push_back(step);
  }
  return {std::move(p), Tableau::normal(std::move(q_rows))};
}

std::vector<Tableau> insertion_sequence(const Permutation& pi) {
  std::vector<Tableau> seq{Tableau{}};
  for (int x : pi.word()) seq.push_back(row_insert(seq.back(), x).tableau);
  return seq;
}

Permutation rsk_inverse(const Tableau& insertion, const Tableau& recording) {
  if (!insertion.is_normal() || !recording.is_normal() ||
      insertion.shape() != recording.shape()) {
    throw DomainError("rsk_inverse needs two tableaux of one normal shape, got " +
                      to_string(insertion.shape()) + " and " +
                      to_string(recording.shape()));
  }
  if (!is_standard(insertion) || !is_standard(recording)) {
    throw DomainError("rsk_inverse needs standard tableaux");
  }
  const int n = insertion.cell_count();
  std::vector<int> word(n);
  Tableau p = insertion;
  auto q_rows = recording.rows();
  for (int k = n; k >= 1; --k) {
    // In a standard Q the largest label sits at an inner corner, though not
    // necessarily in the last row.
    Cell at;
    for (std::size_t i = 0; i < q_rows.size(); ++i) {
      if (q_rows[i].back() == k) {
        at = {static_cast<int>(i) + 1, static_cast<int>(q_rows[i].size())};
      }
    }
    auto [prev, x] = reverse_bump(p, at);
    p = std::move(prev);
    word[k - 1] = x;
    q_rows[at.row - 1].pop_back();
    if (q_rows[at.row - 1].empty()) q_rows.pop_back();
  }
  return Permutation(std::move(word));
}

std::set<Permutation> knuth_neighbors(const Permutation& pi) {
  std::set<Permutation> out;
  const auto& w = pi.word();
  for (std::size_t j = 0; j + 2 < w.size(); ++j) {
    const int a = w[j], b = w[j + 1], c = w[j + 2];
    std::vector<int> next = w;
    // y x z -> y z x  or  y z x -> y x z: swap the last two.
    if ((b < a && a < c) || (c < a && a < b)) {
      std::swap(next[j + 1], next[j + 2]);
      out.insert(Permutation(next));
      next = w;
    }
    // x z y -> z x y  or  z x y -> x z y: swap the first two.
    if ((a < c && c < b) || (b < c && c < a)) {
      std::swap(next[j], next[j + 1]);
      out.insert(Permutation(std::move(next)));
    }
  }
  return out;
}

bool knuth_equivalent(const Permutation& pi, const Permutation& tau) {
  if (pi.size() != tau.size()) {
    throw DomainError("knuth_equivalent: lengths " + std::to_string(pi.size()) +
                      " and " + std::to_string(tau.size()) + " differ");
  }
  return rsk(pi).insertion == rsk(tau).insertion;
}

std::set<Permutation> knuth_class(const Permutation& pi) {
  if (pi.size() > kKnuthOracleMaxLength) {
    throw ResourceError("knuth oracle is limited to length " +
                        std::to_string(kKnuthOracleMaxLength));
  }
  std::set<Permutation> seen{pi};
  std::deque<Permutation> frontier{pi};
  while (!frontier.empty()) {
    const Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const Permutation& next : knuth_neighbors(cur)) {
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  return seen;
}

bool knuth_reachable_oracle(const Permutation& pi, const Permutation& tau) {
  if (pi.size() > kKnuthOracleMaxLength || tau.size() > kKnuthOracleMaxLength) {
    throw ResourceError("knuth oracle is limited to length " +
                        std::to_string(kKnuthOracleMaxLength));
  }
  if (pi.size() != tau.size()) return false;
  return knuth_class(pi).count(tau) > 0;
}

}  // namespace taquin
