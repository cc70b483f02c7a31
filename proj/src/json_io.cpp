#include "taquin/json_io.hpp"

#include <fstream>
#include <sstream>

#include "taquin/error.hpp"

namespace taquin {

Json to_json(const Cell& cell) { return Json::array({cell.row, cell.col}); }

Json to_json(const Partition& shape) { return Json(shape.parts()); }

Json to_json(const SkewShape& shape) {
  return {{"outer", to_json(shape.outer())}, {"inner", to_json(shape.inner())}};
}

namespace {

Json grid_to_json(const std::vector<std::vector<int>>& rows, int empty) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (int v : row) r.push_back(v == empty ? Json(nullptr) : Json(v));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<int>> grid_from_json(const Json& j, int empty) {
  if (!j.is_array()) throw ParseError("expected an array of rows");
  std::vector<std::vector<int>> rows;
  for (const Json& r : j) {
    if (!r.is_array()) throw ParseError("expected a row array");
    std::vector<int> row;
    for (const Json& v : r) {
      if (v.is_null()) {
        row.push_back(empty);
      } else if (v.is_number_integer()) {
        row.push_back(v.get<int>());
      } else {
        throw ParseError("cells must be integers or null, got " + v.dump());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int int_from_json(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<int>();
}

}  // namespace

Json to_json(const Tableau& t) {
  Json j = to_json(t.shape());
  j["rows"] = grid_to_json(t.rows(), Tableau::kEmpty);
  return j;
}

Json to_json(const Permutation& pi) { return Json(pi.word()); }

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const CapacityGrid& caps) {
  Json out = Json::array();
  for (const auto& row : caps.rates()) {
    Json r = Json::array();
    for (const Rational& c : row) r.push_back(to_json(c));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const HmtState& state) {
  Json j = {{"shape", to_json(state.shape())},
            {"cells", grid_to_json(state.cells(), HmtState::kIdle)}};
  if (state.capacities()) j["capacities"] = to_json(*state.capacities());
  return j;
}

Json to_json(const CellPair& pair) {
  return Json::array({to_json(pair.first), to_json(pair.second)});
}

Json to_json(const Relocation& move) {
  return {{"task", move.task}, {"from", to_json(move.from)}, {"to", to_json(move.to)}};
}

Json to_json(const TraceEvent& event) {
  Json trigger;
  if (const auto* done = std::get_if<CompletionTrigger>(&event.trigger)) {
    trigger = {{"completed", done->task}};
  } else {
    trigger = {{"rectify_corner", to_json(std::get<RectifyTrigger>(event.trigger).corner)}};
  }
  Json moves = Json::array();
  for (const auto& m : event.relocations) moves.push_back(to_json(m));
  Json j = {{"trigger", trigger}, {"relocations", moves}, {"state", to_json(event.state)}};
  if (event.noop) j["noop"] = true;
  return j;
}

Json to_json(const ReassignmentTrace& trace) {
  Json events = Json::array();
  for (const auto& e : trace.events) events.push_back(to_json(e));
  return {{"initial", to_json(trace.initial)}, {"events", events}};
}

Json to_json(const SlideStep& step) {
  return {{"hole", to_json(step.hole)},
          {"moved_entry", step.moved_entry},
          {"from", to_json(step.from)}};
}

Json to_json(const std::vector<SlideStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Json to_json(const Turnaround& turnaround) {
  Json runs = Json::array();
  for (const auto& run : turnaround.per_task) {
    runs.push_back({{"task", run.task},
                    {"cell", to_json(run.cell)},
                    {"duration", to_json(run.duration)}});
  }
  return {{"total", to_json(turnaround.total)}, {"per_task", runs}};
}

Cell cell_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a cell is [row, col], got " + j.dump());
  Cell c{int_from_json(j[0]), int_from_json(j[1])};
  if (c.row < 1 || c.col < 1) throw ParseError("cells are 1-based, got " + j.dump());
  return c;
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a partition is an integer array, got " + j.dump());
  std::vector<int> parts;
  for (const Json& v : j) parts.push_back(int_from_json(v));
  return Partition(std::move(parts));
}

SkewShape skew_shape_from_json(const Json& j) {
  return SkewShape(partition_from_json(field(j, "outer")),
                   partition_from_json(field(j, "inner")));
}

Tableau tableau_from_json(const Json& j) {
  return Tableau(skew_shape_from_json(j), grid_from_json(field(j, "rows"), Tableau::kEmpty));
}

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("a permutation is an integer array, got " + j.dump());
  std::vector<int> word;
  for (const Json& v : j) word.push_back(int_from_json(v));
  return Permutation(std::move(word));
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("a rational is a \"p/q\" string, got " + j.dump());
}

CapacityGrid capacity_grid_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("capacities are an array of rows");
  std::vector<std::vector<Rational>> rates;
  std::vector<int> lengths;
  for (const Json& r : j) {
    if (!r.is_array()) throw ParseError("capacity rows are arrays");
    std::vector<Rational> row;
    for (const Json& v : r) row.push_back(rational_from_json(v));
    lengths.push_back(static_cast<int>(row.size()));
    rates.push_back(std::move(row));
  }
  Partition shape;
  try {
    shape = Partition(std::move(lengths));
  } catch (const DomainError&) {
    throw ParseError("capacity rows must have equal, positive lengths");
  }
  return CapacityGrid(std::move(shape), std::move(rates));
}

HmtState hmt_state_from_json(const Json& j) {
  std::optional<CapacityGrid> caps;
  if (j.is_object() && j.contains("capacities") && !j.at("capacities").is_null()) {
    caps = capacity_grid_from_json(j.at("capacities"));
  }
  return HmtState(partition_from_json(field(j, "shape")),
                  grid_from_json(field(j, "cells"), HmtState::kIdle), std::move(caps));
}

TaskSet task_set_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "requirements") : j;
  if (!list.is_array()) throw ParseError("requirements are an array indexed by task ID");
  std::vector<Rational> r;
  for (const Json& v : list) r.push_back(rational_from_json(v));
  return TaskSet(std::move(r));
}

ReassignmentTrace trace_from_json(const Json& j) {
  ReassignmentTrace trace{hmt_state_from_json(field(j, "initial")), {}};
  for (const Json& e : field(j, "events")) {
    const Json& trig = field(e, "trigger");
    Trigger trigger;
    if (trig.contains("completed")) {
      trigger = CompletionTrigger{int_from_json(trig.at("completed"))};
    } else {
      trigger = RectifyTrigger{cell_from_json(field(trig, "rectify_corner"))};
    }
    std::vector<Relocation> moves;
    for (const Json& m : field(e, "relocations")) {
      moves.push_back({int_from_json(field(m, "task")), cell_from_json(field(m, "from")),
                       cell_from_json(field(m, "to"))});
    }
    const bool noop = e.contains("noop") && e.at("noop").is_boolean() && e.at("noop").get<bool>();
    trace.events.push_back({trigger, std::move(moves), hmt_state_from_json(field(e, "state")), noop});
  }
  return trace;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace taquin
