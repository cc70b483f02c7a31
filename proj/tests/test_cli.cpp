#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "taquin/cli.hpp"
#include "taquin/json_io.hpp"

namespace {

const std::string kFixtures = TAQUIN_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = taquin::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("count") {
  CHECK(starts_with(run({"count", "--shape", "3,2,1"}).out, "16\n5 3 1\n3 1\n1\n"));
  CHECK(starts_with(run({"count", "--shape", "4,4,4,4"}).out, "24024\n"));
  CHECK(run({"count", "--shape", "1"}).out == "1\n1\n");
  const auto j = taquin::Json::parse(run({"count", "--shape", "2,1", "--json"}).out);
  CHECK(j.at("count") == "2");
  const Run bad = run({"count", "--shape", "1,2"});
  CHECK(bad.code == taquin::cli::kInputError);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"count"}).code == taquin::cli::kInputError);
}

TEST_CASE("verify-identity") {
  const Run three = run({"verify-identity", "--n", "3"});
  CHECK(three.code == 0);
  CHECK(three.out == "sum of squares: 6\nfactorial: 6\nequal\n");
  CHECK(run({"verify-identity", "--n", "1"}).out == "sum of squares: 1\nfactorial: 1\nequal\n");
  CHECK(run({"verify-identity", "--n", "7"}).out ==
        "sum of squares: 5040\nfactorial: 5040\nequal\n");
  CHECK(run({"verify-identity", "--n", "0"}).code == taquin::cli::kInputError);
}

TEST_CASE("rsk") {
  const Run r = run({"rsk", "--perm", "7,8,2,3,5,4,1,6"});
  CHECK(r.code == 0);
  const auto j = taquin::Json::parse(r.out);
  CHECK(j.at("P").at("rows").dump() == "[[1,3,4,6],[2,8],[5],[7]]");

  const auto id = taquin::Json::parse(run({"rsk", "--perm", "1,2,3,4"}).out);
  CHECK(id.at("P") == id.at("Q"));
  CHECK(id.at("P").at("rows").dump() == "[[1,2,3,4]]");

  CHECK(run({"rsk", "--perm", "1,1"}).code == taquin::cli::kInputError);
}

TEST_CASE("rsk inverse round trip over S_5") {
  const auto dir = std::filesystem::temp_directory_path() / "taquin_cli_rsk";
  std::filesystem::create_directories(dir);
  const std::string p_path = (dir / "P.json").string(), q_path = (dir / "Q.json").string();
  std::vector<int> w{1, 2, 3, 4, 5};
  do {
    std::string word;
    for (int x : w) word += (word.empty() ? "" : ",") + std::to_string(x);
    const auto pq = taquin::Json::parse(run({"rsk", "--perm", word}).out);
    std::FILE* f = std::fopen(p_path.c_str(), "w");
    std::fputs(pq.at("P").dump().c_str(), f);
    std::fclose(f);
    f = std::fopen(q_path.c_str(), "w");
    std::fputs(pq.at("Q").dump().c_str(), f);
    std::fclose(f);
    const Run back = run({"rsk", "--inverse", p_path, q_path});
    CHECK(back.code == 0);
    CHECK(taquin::Json::parse(back.out) == taquin::Json(w));
  } while (std::next_permutation(w.begin(), w.end()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("rectify") {
  const Run e = run({"rectify", "--state", fixture("fig6c.json")});
  CHECK(e.code == 0);
  const auto j = taquin::Json::parse(e.out);
  CHECK(j.at("events").size() == 4);
  CHECK(j.at("events").back().at("state").at("cells").dump() ==
        "[[1,3,5,null],[2,6,7,null],[4,null,null,null],[8,null,null,null]]");

  const auto t = taquin::Json::parse(run({"rectify", "--state", fixture("fig4_t1.json")}).out);
  CHECK(t.at("events").back().at("state").at("cells").dump() ==
        "[[1,3,4,6],[2,8,null,null],[5,null,null,null],[7,null,null,null]]");

  const Run n = run({"rectify", "--state", fixture("fig3_a0.json")});
  CHECK(n.code == 0);
  CHECK(taquin::Json::parse(n.out).at("events").empty());

  CHECK(run({"rectify", "--state", fixture("fig6b.json")}).code == taquin::cli::kInputError);
  CHECK(run({"rectify", "--state", fixture("nope.json")}).code == taquin::cli::kInputError);
}

TEST_CASE("simulate") {
  const Run r = run({"simulate", "--state", fixture("fig3_a0.json"), "--completions",
                     "1,3,2,5,8,4,6,7,9"});
  CHECK(r.code == 0);
  const auto j = taquin::Json::parse(r.out);
  REQUIRE(j.at("events").size() == 9);
  CHECK(j.at("events")[7].at("state").at("cells").dump() ==
        "[[9,null,null],[null,null,null],[null,null,null]]");
  CHECK(j.at("events")[8].at("noop") == true);

  const Run absent =
      run({"simulate", "--state", fixture("fig3_a0.json"), "--completions", "1,42"});
  CHECK(absent.code == taquin::cli::kInputError);
  CHECK(absent.err.find("42") != std::string::npos);

  const auto small = taquin::Json::parse(
      run({"simulate", "--state", fixture("one_by_two.json"), "--completions", "1,2"}).out);
  REQUIRE(small.at("events").size() == 2);
  CHECK(small.at("events")[0].at("relocations").dump() == R"([{"from":[1,2],"task":2,"to":[1,1]}])");
  CHECK(small.at("events")[1].at("relocations").empty());
}

TEST_CASE("turnaround") {
  const Run r = run({"turnaround", "--state", fixture("two_by_two.json"), "--requirements",
                     fixture("two_by_two_requirements.json"), "--capacities",
                     fixture("two_by_two_capacities.json"), "--compare"});
  CHECK(r.code == 0);
  CHECK(r.out == "T1: 9/2\nT2: 5/2\nT1-T2: 2/1\n");

  const Run one = run({"turnaround", "--state", fixture("single.json"), "--requirements",
                       fixture("single_requirements.json"), "--compare"});
  CHECK(one.code == 0);
  CHECK(one.out == "T1: 3/1\nT2: 3/1\nT1-T2: 0/1\n");

  const Run rnd = run({"turnaround", "--random", "--seed", "5"});
  CHECK(rnd.code == 0);
  const auto at = rnd.out.find("T1-T2: ");
  REQUIRE(at != std::string::npos);
  CHECK(rnd.out[at + 7] != '0');
  CHECK(rnd.out[at + 7] != '-');
  CHECK(run({"turnaround", "--random", "--seed", "5"}).out == rnd.out);

  const auto per = taquin::Json::parse(
      run({"turnaround", "--state", fixture("two_by_two.json"), "--requirements",
           fixture("two_by_two_requirements.json"), "--capacities",
           fixture("two_by_two_capacities.json"), "--relocate"})
          .out);
  CHECK(per.at("total") == "5/2");
  CHECK(per.at("per_task").size() == 4);

  CHECK(run({"turnaround", "--state", fixture("two_by_two.json")}).code ==
        taquin::cli::kInputError);
}

TEST_CASE("turnaround seed from environment") {
  ::setenv("TAQUIN_SEED", "5", 1);
  const Run env = run({"turnaround", "--random"});
  ::unsetenv("TAQUIN_SEED");
  CHECK(env.out == run({"turnaround", "--random", "--seed", "5"}).out);
}

TEST_CASE("check") {
  const Run b = run({"check", "--state", fixture("fig6b.json")});
  CHECK(b.code == 0);
  CHECK(b.out.find("classification: generalized\n") != std::string::npos);
  CHECK(b.out.find("descent pairs: 1\n  {(1,1),(1,2)}\n") != std::string::npos);

  const Run d = run({"check", "--state", fixture("fig6d.json")});
  CHECK(d.out.find("classification: generalized\n") != std::string::npos);
  CHECK(d.out.find("descent pairs: 2\n") != std::string::npos);

  const Run s = run({"check", "--state", fixture("fig3_a0.json")});
  CHECK(s.out.find("classification: standard\n") != std::string::npos);
  CHECK(s.out.find("descent pairs: 0\n") != std::string::npos);

  const Run gap = run({"check", "--state", fixture("gap.json")});
  CHECK(gap.out.find("invalid") != std::string::npos);
}

TEST_CASE("figures match the golden files") {
  const Run r = run({"--figures"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(run({"figures"}).out == r.out);
}

TEST_CASE("other commands") {
  CHECK(taquin::Json::parse(run({"partitions", "--n", "4"}).out).size() == 5);
  const auto k = taquin::Json::parse(run({"knuth", "--perm", "2,1,3", "--other", "2,3,1"}).out);
  CHECK(k.at("knuth_equivalent") == true);
  const auto ins = taquin::Json::parse(
      run({"insert", "--tableau", fixture("fig1_p.json"), "--value", "5"}).out);
  CHECK(ins.at("added").dump() == "[3,3]");
  const auto fwd = taquin::Json::parse(
      run({"slide-forward", "--tableau", fixture("slide_p.json"), "--start", "1,1"}).out);
  CHECK(fwd.at("vacated").dump() == "[3,3]");
  const auto bwd = taquin::Json::parse(
      run({"slide-backward", "--tableau", fixture("slide_p.json"), "--start", "2,4"}).out);
  CHECK(bwd.at("vacated").dump() == "[1,2]");
  const auto mesh =
      taquin::Json::parse(run({"mesh", "--shape", "4,4,4,4", "--inner", "2,2", "--directed"}).out);
  CHECK(mesh.at("vertices").size() == 12);
  CHECK(mesh.at("edges").size() == 16);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"rectify", "--state", fixture("fig4_t2.json")};
  CHECK(run(args).out == run(args).out);
}
