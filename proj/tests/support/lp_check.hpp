#pragma once

// Minimal LP-file reader and 0/1 brute-force optimizer for the models the
// toolkit exports. No external solver involved.

#include <string>
#include <utility>
#include <vector>

namespace oracle {

struct LpConstraint {
    std::string name;
    std::vector<std::pair<int, int>> terms;  // (coefficient, variable index)
    int rhs = 1;                             // sum >= rhs
};

struct LpModel {
    int num_vars = 0;  // binaries y_0..y_{num_vars-1}
    std::vector<LpConstraint> constraints;
};

LpModel parse_lp(const std::string& text);

// Minimum objective over all 0/1 assignments satisfying every constraint;
// -1 if infeasible. Caps at 2^20 assignments.
int lp_brute_force_optimum(const LpModel& model);

}  // namespace oracle
