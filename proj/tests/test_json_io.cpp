#include <string>

#include "doctest.h"
#include "taquin/error.hpp"
#include "taquin/figures.hpp"
#include "taquin/json_io.hpp"
#include "taquin/random.hpp"

using namespace taquin;

namespace {
const std::string kFixtures = TAQUIN_FIXTURE_DIR;
}

TEST_CASE("tableau json layout") {
  const Json j = to_json(figures::slide_example());
  CHECK(j.dump() ==
        R"({"inner":[1],"outer":[4,3,3],"rows":[[null,3,5,9],[2,4,8],[6,7,10]]})");
  CHECK(tableau_from_json(j) == figures::slide_example());
  CHECK(to_json(Tableau::normal({{1}})).dump() == R"({"inner":[],"outer":[1],"rows":[[1]]})");
}

TEST_CASE("state and trace json layout") {
  const HmtState s = HmtState(Partition({1, 1}), {{1}, {2}});
  const auto trace = reassignment_sequence(s, {1});
  CHECK(to_json(trace).dump() ==
        R"({"events":[{"relocations":[{"from":[2,1],"task":2,"to":[1,1]}],"state":)"
        R"({"cells":[[2],[null]],"shape":[1,1]},"trigger":{"completed":1}}],)"
        R"("initial":{"cells":[[1],[2]],"shape":[1,1]}})");
  const auto rect = rectify_assignment(figures::slide_up_initial());
  CHECK(to_json(rect.events[0]).at("trigger").dump() == R"({"rectify_corner":[2,2]})");
  CHECK(to_json(Rational(5, 2)) == "5/2");
}

TEST_CASE("round trips") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const HmtState s = random_skew_assignment(rng, 4, 4);
    const HmtState with_caps(s.shape(), s.cells(), random_capacity_grid(rng, s.shape()));
    CHECK(hmt_state_from_json(to_json(with_caps)) == with_caps);
    const auto trace = rectify_assignment(s);
    CHECK(to_json(trace_from_json(to_json(trace))) == to_json(trace));
    const Tableau t = maximally_embedded(s).tableau;
    CHECK(tableau_from_json(to_json(t)) == t);
  }
  const auto seq = reassignment_sequence(figures::completion_initial(), figures::completion_order());
  CHECK(to_json(trace_from_json(to_json(seq))) == to_json(seq));
  CHECK(permutation_from_json(Json::parse("[3,1,2]")) == Permutation({3, 1, 2}));
  CHECK(skew_shape_from_json(Json::parse(R"({"outer":[2,1],"inner":[1]})")) ==
        SkewShape(Partition({2, 1}), Partition({1})));
  CHECK(task_set_from_json(Json::parse(R"({"requirements":["3/2",1]})")).requirements() ==
        std::vector<Rational>{Rational(3, 2), 1});
}

TEST_CASE("decode errors") {
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"("3,2")")), ParseError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), DomainError);
  CHECK_THROWS_AS(cell_from_json(Json::parse("[1]")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::parse(R"("1/0")")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::parse("1.5")), ParseError);
  CHECK_THROWS_AS(hmt_state_from_json(Json::parse(R"({"cells":[[1]]})")), ParseError);
  CHECK_THROWS_AS(tableau_from_json(Json::parse(R"({"outer":[2],"inner":[],"rows":[[2,2]]})")),
                  StructuralError);
  CHECK_THROWS_AS(read_json_file(kFixtures + "/missing.json"), ParseError);
}

TEST_CASE("fixtures load") {
  const HmtState a = hmt_state_from_json(read_json_file(kFixtures + "/fig4_t1.json"));
  CHECK(a == figures::skew_assignment_a());
  const HmtState c = hmt_state_from_json(read_json_file(kFixtures + "/fig6c.json"));
  CHECK(c == figures::slide_up_initial());
  CHECK(tableau_from_json(read_json_file(kFixtures + "/fig1_p.json")) ==
        figures::row_insertion_input());
}

TEST_CASE("canonical dump") {
  CHECK(canonical_dump(Json::parse(R"({"b":1,"a":[1,2]})")) ==
        "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}
