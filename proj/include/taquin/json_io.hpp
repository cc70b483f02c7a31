#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "taquin/hms.hpp"
#include "taquin/jdt.hpp"
#include "taquin/rsk.hpp"
#include "taquin/tableaux.hpp"

namespace taquin {

using Json = nlohmann::json;

// Encoders. Objects use sorted keys, cells are [row, col] pairs, idle or
// inner cells are null, and rationals are "p/q" strings.
Json to_json(const Cell& cell);
Json to_json(const Partition& shape);
Json to_json(const SkewShape& shape);
Json to_json(const Tableau& t);
Json to_json(const Permutation& pi);
Json to_json(const Rational& r);
Json to_json(const CapacityGrid& caps);
Json to_json(const HmtState& state);
Json to_json(const CellPair& pair);
Json to_json(const Relocation& move);
Json to_json(const TraceEvent& event);
Json to_json(const ReassignmentTrace& trace);
Json to_json(const SlideStep& step);
Json to_json(const std::vector<SlideStep>& steps);
Json to_json(const Turnaround& turnaround);

// Decoders; malformed input raises ParseError, and the value constructors
// raise their own errors on invariant violations.
Cell cell_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SkewShape skew_shape_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
Rational rational_from_json(const Json& j);
CapacityGrid capacity_grid_from_json(const Json& j);
HmtState hmt_state_from_json(const Json& j);
TaskSet task_set_from_json(const Json& j);
ReassignmentTrace trace_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string canonical_dump(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace taquin
