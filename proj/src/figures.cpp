#include "taquin/figures.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace taquin::figures {

namespace {

constexpr TaskId _ = HmtState::kIdle;

HmtState grid(std::vector<std::vector<TaskId>> cells) {
  const int rows = static_cast<int>(cells.size());
  const int cols = static_cast<int>(cells.front().size());
  return HmtState(Partition(std::vector<int>(rows, cols)), std::move(cells));
}

Json word_json(const std::vector<int>& w) { return Json(w); }

Json slide_json(const Cell& start, const SlideResult& r) {
  return {{"start", to_json(start)},
          {"result", to_json(r.tableau)},
          {"vacated", to_json(r.vacated)},
          {"steps", to_json(r.steps)}};
}

Json pairs_json(const std::vector<CellPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(to_json(p));
  return out;
}

Json insertion_json(const Permutation& pi) {
  Json seq = Json::array();
  for (const Tableau& p : insertion_sequence(pi)) seq.push_back(to_json(p));
  return {{"word", to_json(pi)}, {"insertion_tableaux", seq}};
}

Json skew_case(const HmtState& state) {
  const Embedding e = maximally_embedded(state);
  return {{"state", to_json(state)},
          {"embedded", to_json(e.tableau)},
          {"reading_word", word_json(reading_word(e.tableau))},
          {"trace", to_json(rectify_assignment(state))}};
}

}  // namespace

Tableau row_insertion_input() {
  return Tableau::normal({{1, 3, 8, 10}, {2, 4, 9}, {6, 7}, {11, 12}});
}

Tableau slide_example() {
  return Tableau(SkewShape(Partition({4, 3, 3}), Partition({1})),
                 {{Tableau::kEmpty, 3, 5, 9}, {2, 4, 8}, {6, 7, 10}});
}

HmtState completion_initial() { return grid({{1, 2, 4}, {3, 5, 7}, {6, 8, 9}}); }

std::vector<TaskId> completion_order() { return {1, 3, 2, 5, 8, 4, 6, 7, 9}; }

HmtState skew_assignment_a() {
  return grid({{_, _, 1, 6}, {_, _, 4, _}, {2, 3, 5, _}, {7, 8, _, _}});
}

HmtState skew_assignment_b() {
  return grid({{_, _, 1, 6}, {_, 3, 4, _}, {2, 5, _, _}, {7, 8, _, _}});
}

HmtState generalized_assignment() {
  return grid({{2, 1, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}});
}

HmtState slide_up_initial() {
  return grid({{_, _, 1, 5}, {_, _, 3, 7}, {2, 6, _, _}, {4, 8, _, _}});
}

std::vector<Figure> all() {
  std::vector<Figure> out;

  {
    const Tableau p = row_insertion_input();
    const auto r = row_insert(p, 5);
    out.push_back({"fig1_row_insertion",
                   {{"input", to_json(p)}, {"inserted", 5},
                    {"result", to_json(r.tableau)}, {"added", to_json(r.added)}}});
    const auto back = reverse_bump(r.tableau, r.added);
    out.push_back({"fig2_reverse_bumping",
                   {{"input", to_json(r.tableau)}, {"cell", to_json(r.added)},
                    {"result", to_json(back.tableau)}, {"extracted", back.entry}}});
  }

  {
    const Tableau p = slide_example();
    const Cell x{1, 1}, y{2, 4};
    const auto fwd = forward_slide(p, x);
    const auto bwd = backward_slide(p, y);
    const auto restored = backward_slide(fwd.tableau, fwd.vacated);
    out.push_back({"jdt_slides",
                   {{"input", to_json(p)},
                    {"forward", slide_json(x, fwd)},
                    {"backward", slide_json(y, bwd)},
                    {"restore", slide_json(fwd.vacated, restored)},
                    {"restores_input", restored.tableau == p}}});
  }

  out.push_back({"fig3_reassignment",
                 {{"completions", Json(completion_order())},
                  {"trace", to_json(reassignment_sequence(completion_initial(),
                                                          completion_order()))}}});

  {
    const HmtState a = skew_assignment_a();
    const HmtState b = skew_assignment_b();
    out.push_back({"fig4_rectify_t1", skew_case(a)});
    out.push_back({"fig4_rectify_t2", skew_case(b)});
    const auto wa = reading_word(maximally_embedded(a).tableau);
    const auto wb = reading_word(maximally_embedded(b).tableau);
    const Permutation pi(wa), tau(wb);
    out.push_back({"fig5_insertion",
                   {{"pi", insertion_json(pi)},
                    {"tau", insertion_json(tau)},
                    {"knuth_equivalent", knuth_equivalent(pi, tau)},
                    {"reassignment_equivalent", reassignment_equivalent(a, b)}}});
  }

  {
    const HmtState b = generalized_assignment();
    out.push_back({"fig6b_descent_pair",
                   {{"state", to_json(b)}, {"descent_pairs", pairs_json(descent_pairs(b))}}});
    const HmtState c = slide_up_initial();
    const HmtState d = naive_slide_up(c);
    out.push_back({"fig6d_slide_up",
                   {{"initial", to_json(c)}, {"result", to_json(d)},
                    {"descent_pairs", pairs_json(descent_pairs(d))}}});
    const auto trace = rectify_assignment(c);
    out.push_back({"fig6e_rectify",
                   {{"trace", to_json(trace)},
                    {"descent_pairs", pairs_json(descent_pairs(trace.final_state()))}}});
  }
  return out;
}

GoldenReport check_golden(const std::string& dir, bool update) {
  GoldenReport report;
  for (const Figure& fig : all()) {
    const auto path = std::filesystem::path(dir) / (fig.name + ".json");
    const std::string text = canonical_dump(fig.output);
    if (update) {
      std::ofstream(path, std::ios::binary) << text;
      report.passed.push_back(fig.name);
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      report.failed.push_back(fig.name + ": missing " + path.string());
      continue;
    }
    std::ostringstream golden;
    golden << in.rdbuf();
    if (golden.str() == text) {
      report.passed.push_back(fig.name);
    } else {
      report.failed.push_back(fig.name + ": differs from " + path.string());
    }
  }
  return report;
}

}  // namespace taquin::figures
