#pragma once

#include <string>
#include <vector>

#include "taquin/json_io.hpp"

namespace taquin::figures {

// Worked scenarios bundled with the CLI. Each renders to canonical JSON and
// is compared byte for byte against a committed golden file `<name>.json`.

Tableau row_insertion_input();       // [1,3,8,10],[2,4,9],[6,7],[11,12]
Tableau slide_example();             // (4,3,3)/(1): [.,3,5,9],[2,4,8],[6,7,10]
HmtState completion_initial();       // 3x3: [1,2,4],[3,5,7],[6,8,9]
std::vector<TaskId> completion_order();  // 1,3,2,5,8,4,6,7,9
HmtState skew_assignment_a();        // 4x4 grid, (4,3,3,2)/(2,2)
HmtState skew_assignment_b();        // 4x4 grid, (4,3,2,2)/(2,1)
HmtState generalized_assignment();   // 4x4 with 2 and 1 swapped
HmtState slide_up_initial();         // 4x4, (4,4,2,2)/(2,2)

struct Figure {
  std::string name;
  Json output;
};

std::vector<Figure> all();

struct GoldenReport {
  std::vector<std::string> passed;
  std::vector<std::string> failed;  // "name: reason"
};

/// Compares every figure against `<dir>/<name>.json`; with `update`,
/// rewrites the files instead.
GoldenReport check_golden(const std::string& dir, bool update);

}  // namespace taquin::figures
