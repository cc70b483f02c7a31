// Acceptance suite: one PASS/FAIL line per criterion. Limits and instance
// counts below are fixed; TAQUIN_SEED changes the random instances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "taquin/figures.hpp"
#include "taquin/hms.hpp"
#include "taquin/jdt.hpp"
#include "taquin/random.hpp"
#include "taquin/rsk.hpp"

using namespace taquin;

namespace {

constexpr double kNoLimit = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_ms;
  std::function<Outcome()> body;
};

std::uint64_t g_seed = kDefaultSeed;

std::vector<Permutation> all_perms(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// A skew shape with exactly `cells` cells and a non-empty inner shape:
// a random inner shape grown by `cells` random outer corners.
SkewShape random_skew_shape(Rng& rng, int cells) {
  Partition inner;
  while (inner.empty()) inner = random_partition_in_box(rng, 3, 3);
  Partition outer = inner;
  for (int k = 0; k < cells; ++k) {
    const auto corners = outer_corners(outer);
    outer = outer.with(corners[uniform_int(rng, 0, int(corners.size()) - 1)]);
  }
  return SkewShape(outer, inner);
}

// A random walk of slides; the result rectifies to the same tableau.
Tableau shuffle_by_slides(Rng& rng, Tableau t, int moves) {
  for (int k = 0; k < moves || t.is_normal(); ++k) {
    const auto outs = outer_corners(t.shape().outer());
    const auto ins = inner_corners(t.shape().inner());
    if (!ins.empty() && uniform_int(rng, 0, 1) == 0) {
      t = forward_slide(t, ins[uniform_int(rng, 0, int(ins.size()) - 1)]).tableau;
    } else {
      t = backward_slide(t, outs[uniform_int(rng, 0, int(outs.size()) - 1)]).tableau;
    }
  }
  return t;
}

void rectify_every_order(const Tableau& p, std::set<std::vector<std::vector<int>>>& out) {
  if (p.is_normal()) {
    out.insert(p.rows());
    return;
  }
  for (const Cell& c : inner_corners(p.shape().inner()))
    rectify_every_order(forward_slide(p, c).tableau, out);
}

Outcome ac1() {
  const BigInt a = count_syt(Partition({3, 2, 1}));
  const BigInt b = count_syt(Partition({4, 4, 4, 4}));
  std::ostringstream d;
  d << "f(3,2,1)=" << a << " f(4,4,4,4)=" << b;
  return {a == 16 && b == 24024, d.str()};
}

Outcome ac2() {
  long roundtrips = 0, failures = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& pi : all_perms(n)) {
      const auto pq = rsk(pi);
      ++roundtrips;
      if (rsk_inverse(pq.insertion, pq.recording) != pi) ++failures;
    }
  bool hook_ok = true;
  for (int n = 1; n <= 10; ++n) hook_ok = hook_ok && verify_sum_squares(n).equal;
  bool image_ok = true;
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
    std::map<Partition, std::set<std::vector<std::vector<int>>>> p_by_shape;
    for (const Permutation& pi : all_perms(n)) {
      const auto pq = rsk(pi);
      images.insert({pq.insertion.rows(), pq.recording.rows()});
      p_by_shape[pq.insertion.shape().outer()].insert(pq.insertion.rows());
    }
    BigInt squares = 0;
    for (const auto& [shape, ps] : p_by_shape) squares += BigInt(ps.size()) * ps.size();
    image_ok = image_ok && BigInt(images.size()) == factorial(n) && squares == factorial(n);
  }
  std::ostringstream d;
  d << roundtrips << " roundtrips over S_1..S_6, " << failures << " failures; "
    << "hook identity n<=10 " << (hook_ok ? "ok" : "FAILED") << "; RSK image count n<=7 "
    << (image_ok ? "ok" : "FAILED");
  return {failures == 0 && roundtrips >= 873 && hook_ok && image_ok, d.str()};
}

Outcome ac3() {
  const auto report = figures::check_golden(TAQUIN_GOLDEN_DIR, false);
  const std::set<std::string> required = {
      "fig1_row_insertion", "fig2_reverse_bumping", "jdt_slides",     "fig3_reassignment",
      "fig4_rectify_t1",    "fig4_rectify_t2",      "fig5_insertion", "fig6b_descent_pair",
      "fig6d_slide_up",     "fig6e_rectify"};
  std::set<std::string> passed(report.passed.begin(), report.passed.end());
  std::ostringstream d;
  d << passed.size() << " golden files match, " << report.failed.size() << " differ";
  for (const auto& f : report.failed) d << "; " << f;
  bool all = report.failed.empty();
  for (const auto& name : required) all = all && passed.count(name);
  return {all, d.str()};
}

Outcome ac4() {
  long tableaux = 0, disagreements = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Partition& outer : partitions_of(n))
      for (int k = 1; k < n; ++k)
        for (const Partition& inner : partitions_of(k)) {
          bool fits = inner.rows() <= outer.rows();
          for (int i = 1; fits && i <= inner.rows(); ++i)
            fits = inner.row_length(i) <= outer.row_length(i);
          if (!fits) continue;
          for (const Tableau& t : enumerate_syt(SkewShape(outer, inner))) {
            std::set<std::vector<std::vector<int>>> results;
            rectify_every_order(t, results);
            ++tableaux;
            if (results.size() != 1) ++disagreements;
          }
        }
  std::ostringstream d;
  d << tableaux << " skew tableaux (outer <= 7 cells), " << disagreements
    << " with more than one rectification";
  return {disagreements == 0 && tableaux > 0, d.str()};
}

Outcome ac5() {
  Rng rng(g_seed + 5);
  int disagreements = 0, equivalent = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int cells = uniform_int(rng, 2, 8);
    const Tableau p1 = random_standard_filling(rng, random_skew_shape(rng, cells));
    const Tableau p2 = trial % 2 == 0
                           ? shuffle_by_slides(rng, p1, uniform_int(rng, 1, 6))
                           : random_standard_filling(rng, random_skew_shape(rng, cells));
    const Permutation w1(reading_word(p1)), w2(reading_word(p2));
    const bool jdt = jdt_equivalent(p1, p2);
    const bool knuth = knuth_equivalent(w1, w2);
    const bool same_p = rsk(w1).insertion == rsk(w2).insertion;
    const bool bfs = knuth_reachable_oracle(w1, w2);
    if (jdt != knuth || knuth != same_p || same_p != bfs) ++disagreements;
    equivalent += jdt;
  }
  std::ostringstream d;
  d << "500 pairs (" << equivalent << " equivalent), " << disagreements << " disagreements";
  return {disagreements == 0, d.str()};
}

Outcome ac6() {
  long pairs = 0, disagreements = 0;
  for (int n = 4; n <= 5; ++n) {
    const auto perms = all_perms(n);
    for (const Permutation& a : perms)
      for (const Permutation& b : perms) {
        ++pairs;
        if (knuth_equivalent(a, b) != knuth_reachable_oracle(a, b)) ++disagreements;
      }
  }
  std::ostringstream d;
  d << pairs << " pairs over S_4 and S_5, " << disagreements << " disagreements";
  return {disagreements == 0 && pairs == 24 * 24 + 120 * 120, d.str()};
}

Outcome ac7() {
  Rng rng(g_seed + 7);
  long states = 0, violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const HmtState a0 = random_normal_assignment(rng, 5, 5);
    std::vector<TaskId> order(a0.task_count());
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    order.resize(uniform_int(rng, 1, int(order.size())));
    const auto trace = reassignment_sequence(a0, order);
    if (!oracle::check_trace_legality(trace).empty()) ++violations;
    for (const auto& ev : trace.events) {
      ++states;
      if (!is_standard(ev.state) || !is_normal_shape(ev.state) || !descent_pairs(ev.state).empty())
        ++violations;
    }
  }
  std::ostringstream d;
  d << "1000 runs, " << states << " intermediate states, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome ac8() {
  Rng rng(g_seed + 8);
  int violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const HmtState a0 = random_normal_assignment(rng, 5, 5, 2);
    const CapacityGrid caps = random_capacity_grid(rng, a0.shape());
    const TaskSet r = random_requirements(rng, a0.task_count(), false);
    const Rational t1 = turnaround_sequential(a0, r, caps, false).total;
    const Rational t2 = turnaround_sequential(a0, r, caps, true).total;
    Rational sum = 0;
    for (const Rational& x : r.requirements()) sum += x;
    if (!(t2 < t1) || t2 != sum / caps.at({1, 1})) ++violations;
  }
  std::ostringstream d;
  d << "500 instances, " << violations << " violations";
  return {violations == 0, d.str()};
}

Outcome ac9() {
  Rng rng(g_seed + 9);
  int positive = 0, rectify_violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const HmtState a0 = random_skew_assignment(rng, 5, 5);
    if (!descent_pairs(naive_slide_up(a0)).empty()) ++positive;
    if (!descent_pairs(rectify_assignment(a0).final_state()).empty()) ++rectify_violations;
  }
  const HmtState fig = figures::slide_up_initial();
  const bool fixture_positive = !descent_pairs(naive_slide_up(fig)).empty();
  const bool fixture_clean = descent_pairs(rectify_assignment(fig).final_state()).empty();
  std::ostringstream d;
  d << "slide-up left descent pairs in " << positive << "/100 random states"
    << (fixture_positive ? " and in the fixture" : ", none in the fixture")
    << "; rectification left pairs in " << rectify_violations + !fixture_clean;
  return {(positive > 0 || fixture_positive) && rectify_violations == 0 && fixture_clean,
          d.str()};
}

}  // namespace

int main() {
  g_seed = seed_from_environment();
  const std::vector<Criterion> criteria = {
      {"AC1", "hook formula", 1.0, ac1},
      {"AC2", "RSK bijection and sum of squares", 10000.0, ac2},
      {"AC3", "figure golden files", 1000.0, ac3},
      {"AC4", "jeu de taquin confluence", 60000.0, ac4},
      {"AC5", "equivalence triangle", kNoLimit, ac5},
      {"AC6", "Knuth oracle", 30000.0, ac6},
      {"AC7", "completion reassignment invariants", kNoLimit, ac7},
      {"AC8", "sequential turnaround", kNoLimit, ac8},
      {"AC9", "slide-up versus rectification", kNoLimit, ac9},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(g_seed));
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_ms == kNoLimit || ms < c.limit_ms;
    const bool pass = o.pass && in_time;
    failed += !pass;
    char timing[96];
    if (c.limit_ms == kNoLimit)
      std::snprintf(timing, sizeof timing, "%.3f ms", ms);
    else
      std::snprintf(timing, sizeof timing, "%.3f ms, limit %.0f ms%s", ms, c.limit_ms,
                    in_time ? "" : " EXCEEDED");
    std::printf("%s %s  %s: %s [%s]\n", c.id, pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                timing);
  }
  std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
