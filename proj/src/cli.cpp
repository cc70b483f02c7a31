#include "taquin/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "taquin/error.hpp"
#include "taquin/figures.hpp"
#include "taquin/json_io.hpp"
#include "taquin/random.hpp"

#ifndef TAQUIN_GOLDEN_DIR
#define TAQUIN_GOLDEN_DIR "tests/golden"
#endif

namespace taquin::cli {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write " + path);
  file << text;
}

void print_grid(std::ostream& out, const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

// Emits the trace to `trace_path`, or to `out` when no path is given.
void emit_trace(std::ostream& out, const ReassignmentTrace& trace,
                const std::string& trace_path) {
  const std::string text = canonical_dump(to_json(trace));
  if (trace_path.empty()) {
    out << text;
    return;
  }
  write_text(trace_path, text);
  out << trace.events.size() << " events written to " << trace_path << "\n"
      << "final: " << to_string(trace.final_state()) << "\n";
}

struct Options {
  std::vector<int> shape;
  std::vector<int> inner;
  int n = 0;
  std::vector<int> perm;
  std::vector<int> other_perm;
  std::vector<std::string> inverse;
  std::string state_path;
  std::string trace_path;
  std::string requirements_path;
  std::string capacities_path;
  std::string tableau_path;
  std::vector<TaskId> completions;
  std::vector<int> cell;
  int value = 0;
  bool compare = false;
  bool relocate = false;
  bool random = false;
  bool json = false;
  bool directed = false;
  bool update = false;
  bool figures = false;
  std::optional<std::uint64_t> seed;
  std::string golden_dir = TAQUIN_GOLDEN_DIR;
};

int cmd_count(const Options& o, std::ostream& out) {
  const Partition shape(o.shape);
  const BigInt f = count_syt(shape);
  if (o.json) {
    out << canonical_dump({{"shape", to_json(shape)},
                           {"count", f.str()},
                           {"hook_lengths", hook_lengths(shape)}});
    return kSuccess;
  }
  out << f << "\n";
  print_grid(out, hook_lengths(shape));
  return kSuccess;
}

int cmd_verify_identity(const Options& o, std::ostream& out) {
  const SumOfSquares s = verify_sum_squares(o.n);
  out << "sum of squares: " << s.sum_of_squares << "\n"
      << "factorial: " << s.factorial << "\n"
      << (s.equal ? "equal" : "NOT equal") << "\n";
  return s.equal ? kSuccess : kPropertyViolated;
}

int cmd_partitions(const Options& o, std::ostream& out) {
  Json list = Json::array();
  for (const Partition& p : partitions_of(o.n)) {
    list.push_back({{"shape", to_json(p)}, {"count", count_syt(p).str()}});
  }
  out << canonical_dump(list);
  return kSuccess;
}

int cmd_rsk(const Options& o, std::ostream& out) {
  if (!o.inverse.empty()) {
    const Tableau p = tableau_from_json(read_json_file(o.inverse.at(0)));
    const Tableau q = tableau_from_json(read_json_file(o.inverse.at(1)));
    out << canonical_dump(to_json(rsk_inverse(p, q)));
    return kSuccess;
  }
  if (o.perm.empty()) throw ParseError("rsk needs --perm or --inverse");
  const auto [p, q] = rsk(Permutation(o.perm));
  out << canonical_dump({{"P", to_json(p)}, {"Q", to_json(q)}});
  return kSuccess;
}

int cmd_knuth(const Options& o, std::ostream& out) {
  const Permutation pi(o.perm), tau(o.other_perm);
  Json neighbors = Json::array();
  for (const auto& nb : knuth_neighbors(pi)) neighbors.push_back(to_json(nb));
  out << canonical_dump({{"knuth_equivalent", knuth_equivalent(pi, tau)},
                         {"neighbors", neighbors}});
  return kSuccess;
}

int cmd_insert(const Options& o, std::ostream& out) {
  const Tableau p = tableau_from_json(read_json_file(o.tableau_path));
  if (!o.cell.empty()) {
    if (o.cell.size() != 2) throw ParseError("--bump takes row,col");
    const auto r = reverse_bump(p, {o.cell[0], o.cell[1]});
    out << canonical_dump({{"result", to_json(r.tableau)}, {"extracted", r.entry}});
    return kSuccess;
  }
  const auto r = row_insert(p, o.value);
  out << canonical_dump({{"result", to_json(r.tableau)}, {"added", to_json(r.added)}});
  return kSuccess;
}

int cmd_slide(const Options& o, std::ostream& out, bool forward) {
  if (o.cell.size() != 2) throw ParseError("a slide start is row,col");
  const Tableau p = tableau_from_json(read_json_file(o.tableau_path));
  const Cell start{o.cell[0], o.cell[1]};
  const auto r = forward ? forward_slide(p, start) : backward_slide(p, start);
  out << canonical_dump({{"result", to_json(r.tableau)},
                         {"vacated", to_json(r.vacated)},
                         {"steps", to_json(r.steps)}});
  return kSuccess;
}

int cmd_mesh(const Options& o, std::ostream& out) {
  const SkewShape shape(Partition(o.shape), Partition(o.inner));
  const MeshGraph g = mesh_graph(shape, o.directed);
  Json vertices = Json::array(), edges = Json::array();
  for (const Cell& c : g.vertices) vertices.push_back(to_json(c));
  for (const auto& [a, b] : g.edges) edges.push_back(Json::array({to_json(a), to_json(b)}));
  Json j = {{"vertices", vertices}, {"edges", edges}, {"directed", g.directed}};
  if (shape.is_normal()) j["standard_labelings"] = count_syt(shape.outer()).str();
  out << canonical_dump(j);
  return kSuccess;
}

int cmd_rectify(const Options& o, std::ostream& out) {
  const HmtState a0 = hmt_state_from_json(read_json_file(o.state_path));
  emit_trace(out, rectify_assignment(a0), o.trace_path);
  return kSuccess;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const HmtState a0 = hmt_state_from_json(read_json_file(o.state_path));
  emit_trace(out, reassignment_sequence(a0, o.completions), o.trace_path);
  return kSuccess;
}

int cmd_turnaround(const Options& o, std::ostream& out) {
  std::optional<HmtState> a0;
  std::optional<TaskSet> tasks;
  std::optional<CapacityGrid> caps;
  if (o.random) {
    const std::uint64_t seed = o.seed.value_or(seed_from_environment());
    Rng rng(seed);
    a0 = random_normal_assignment(rng, 5, 5, 2);
    caps = random_capacity_grid(rng, a0->shape());
    tasks = random_requirements(rng, a0->task_count(), true);
    out << "seed: " << seed << "\n"
        << "state: " << to_string(*a0) << "\n";
  } else {
    if (o.state_path.empty() || o.requirements_path.empty()) {
      throw ParseError("turnaround needs --state and --requirements, or --random");
    }
    a0 = hmt_state_from_json(read_json_file(o.state_path));
    tasks = task_set_from_json(read_json_file(o.requirements_path));
    if (!o.capacities_path.empty()) {
      caps = capacity_grid_from_json(read_json_file(o.capacities_path));
    } else if (a0->capacities()) {
      caps = a0->capacities();
    } else {
      caps = default_capacity_grid(a0->shape());
    }
  }

  if (!o.compare && !o.random) {
    out << canonical_dump(to_json(turnaround_sequential(*a0, *tasks, *caps, o.relocate)));
    return kSuccess;
  }
  const Rational t1 = turnaround_sequential(*a0, *tasks, *caps, false).total;
  const Rational t2 = turnaround_sequential(*a0, *tasks, *caps, true).total;
  out << "T1: " << to_string(t1) << "\n"
      << "T2: " << to_string(t2) << "\n"
      << "T1-T2: " << to_string(Rational(t1 - t2)) << "\n";
  const bool holds = a0->task_count() < 2 ? t1 == t2 : t2 < t1;
  return holds ? kSuccess : kPropertyViolated;
}

int cmd_check(const Options& o, std::ostream& out) {
  const HmtState state = hmt_state_from_json(read_json_file(o.state_path));
  const auto pairs = descent_pairs(state);
  if (!is_valid(state)) {
    out << "classification: invalid (busy cells do not form a skew shape)\n";
  } else {
    const Embedding e = maximally_embedded(state);
    const Classification c = validate(e.tableau);
    out << "classification: "
        << (c.ordering == Ordering::kGeneralized ? "generalized" : "standard") << "\n"
        << "shape: " << to_string(c.kind) << "\n"
        << "embedded: " << to_string(e.shape) << "\n";
  }
  out << "descent pairs: " << pairs.size() << "\n";
  for (const auto& p : pairs) {
    out << "  {" << to_string(p.first) << "," << to_string(p.second) << "}\n";
  }
  return kSuccess;
}

int cmd_figures(const Options& o, std::ostream& out) {
  const auto report = figures::check_golden(o.golden_dir, o.update);
  for (const auto& name : report.passed) out << (o.update ? "wrote " : "ok   ") << name << "\n";
  for (const auto& failure : report.failed) out << "FAIL " << failure << "\n";
  return report.failed.empty() ? kSuccess : kPropertyViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Young-tableau task reassignment toolkit for hierarchical 2D meshes", "taquin"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--figures", o.figures, "Check every bundled figure against its golden file");
  app.add_option("--golden", o.golden_dir, "Golden file directory for --figures");

  auto* count = app.add_subcommand("count", "Count standard tableaux of a shape with the hook formula");
  count->add_option("--shape", o.shape, "Shape, e.g. 3,2,1")->required()->delimiter(',');
  count->add_flag("--json", o.json, "Print JSON");

  auto* identity = app.add_subcommand("verify-identity", "Check that the squared counts over all shapes of n sum to n!");
  identity->add_option("--n", o.n)->required()->check(CLI::Range(1, 1000));

  auto* parts = app.add_subcommand("partitions", "List the partitions of n with their tableau counts");
  parts->add_option("--n", o.n)->required()->check(CLI::Range(0, 60));

  auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux of a permutation, or the inverse map");
  auto* perm_opt = rsk_cmd->add_option("--perm", o.perm, "One-line permutation, e.g. 2,1,3")->delimiter(',');
  rsk_cmd->add_option("--inverse", o.inverse, "P.json Q.json")->expected(2)->excludes(perm_opt);

  auto* knuth = app.add_subcommand("knuth", "Knuth equivalence of two permutations");
  knuth->add_option("--perm", o.perm)->required()->delimiter(',');
  knuth->add_option("--other", o.other_perm)->required()->delimiter(',');

  auto* insert = app.add_subcommand("insert", "Row-insert a value, or reverse-bump a corner");
  insert->add_option("--tableau", o.tableau_path)->required();
  auto* value_opt = insert->add_option("--value", o.value);
  insert->add_option("--bump", o.cell, "row,col")->delimiter(',')->excludes(value_opt);

  auto* fslide = app.add_subcommand("slide-forward", "Forward slide into an inner corner of the inner shape");
  auto* bslide = app.add_subcommand("slide-backward", "Backward slide into an outer corner of the outer shape");
  for (auto* sub : {fslide, bslide}) {
    sub->add_option("--tableau", o.tableau_path)->required();
    sub->add_option("--start", o.cell, "row,col")->required()->delimiter(',');
  }

  auto* mesh = app.add_subcommand("mesh", "Mesh graph of a (skew) shape");
  mesh->add_option("--shape", o.shape)->required()->delimiter(',');
  mesh->add_option("--inner", o.inner)->delimiter(',');
  mesh->add_flag("--directed", o.directed);

  auto* rectify_cmd = app.add_subcommand("rectify", "Greedy reassignment of a skew-shape assignment to normal shape");
  rectify_cmd->add_option("--state", o.state_path)->required();
  rectify_cmd->add_option("--trace", o.trace_path, "Write the trace here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Completion-driven reassignment");
  simulate->add_option("--state", o.state_path)->required();
  simulate->add_option("--completions", o.completions, "Task IDs in completion order")->required()->delimiter(',');
  simulate->add_option("--trace", o.trace_path, "Write the trace here instead of stdout");

  auto* turnaround = app.add_subcommand("turnaround", "Sequential turnaround with and without reassignment");
  turnaround->add_option("--state", o.state_path);
  turnaround->add_option("--requirements", o.requirements_path, "JSON array of r(1..m)");
  turnaround->add_option("--capacities", o.capacities_path, "JSON grid of rates");
  turnaround->add_flag("--compare", o.compare, "Print T1, T2 and T1-T2");
  turnaround->add_flag("--relocate", o.relocate, "Reassign after every completion");
  turnaround->add_flag("--random", o.random, "Use a seeded random instance");
  turnaround->add_option("--seed", o.seed, "Seed for --random (default: TAQUIN_SEED or a fixed constant)");

  auto* check = app.add_subcommand("check", "Classify an assignment and list its descent pairs");
  check->add_option("--state", o.state_path)->required();

  auto* figs = app.add_subcommand("figures", "Check every bundled figure against its golden file");
  figs->add_option("--golden", o.golden_dir);
  figs->add_flag("--update", o.update, "Rewrite the golden files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*count) return cmd_count(o, out);
    if (*identity) return cmd_verify_identity(o, out);
    if (*parts) return cmd_partitions(o, out);
    if (*rsk_cmd) return cmd_rsk(o, out);
    if (*knuth) return cmd_knuth(o, out);
    if (*insert) return cmd_insert(o, out);
    if (*fslide) return cmd_slide(o, out, true);
    if (*bslide) return cmd_slide(o, out, false);
    if (*mesh) return cmd_mesh(o, out);
    if (*rectify_cmd) return cmd_rectify(o, out);
    if (*simulate) return cmd_simulate(o, out);
    if (*turnaround) return cmd_turnaround(o, out);
    if (*check) return cmd_check(o, out);
    if (*figs || o.figures) return cmd_figures(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  out << app.help();
  return kInputError;
}

}  // namespace taquin::cli
