#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixdim/bitset.hpp"
#include "mixdim/distance.hpp"
#include "mixdim/graph.hpp"
#include "mixdim/metrics.hpp"

namespace mixdim {

// One pair of elements together with every vertex that separates it. A
// generator is exactly a hitting set of these.
struct PairConstraint {
    Element first;
    Element second;
    VertexSet distinguishers;
};

// One constraint per unordered pair in the variant's universe, in
// lexicographic pair order. Throws std::invalid_argument when the graph
// exceeds the bitset capacity, std::logic_error if a pair has no
// distinguisher (impossible on valid connected graphs).
std::vector<PairConstraint> build_constraints(const DistanceTable& t, Variant variant);

struct SolverConfig {
    long node_budget = 10'000'000;
    int max_vertices = 64;   // raise up to VertexSet::kCapacity for big instances
    bool canonical = false;  // lexicographically smallest optimal basis
    bool parallel = false;   // concurrent exploration of root branches
};

enum class SolveStatus {
    optimal,          // value proven optimal by exhausted search
    budget_exceeded,  // best incumbent only; never reported as optimal
};

struct SolveResult {
    Variant variant = Variant::mdim;
    int value = 0;
    std::vector<int> basis;
    int lower_bound = 0;   // root bound the search started from
    int upper_bound = 0;   // initial greedy incumbent
    long nodes_explored = 0;
    SolveStatus status = SolveStatus::optimal;

    bool optimal() const { return status == SolveStatus::optimal; }
};

// Exact minimum generator via hitting-set branch and bound. For mdim the
// structurally forced vertices are included up front; dim/edim search
// unaided (the forcing propositions hold for mixed generators only).
SolveResult solve(const Graph& g, Variant variant, const SolverConfig& cfg = {});

// Structural lower bound for mdim: forced vertices plus, per false-twin
// class, the members the class still owes beyond the forced ones; never
// below 2.
int lower_bound(const Graph& g);

struct GirthBound {
    int value;  // n - g + 3 when cyclic, n otherwise
    std::optional<std::vector<int>> witness_cycle;
};

GirthBound upper_bound_girth(const Graph& g);

// LP-file text of the 0/1 program: minimize sum y_i subject to one
// >= 1 constraint per element pair, coefficient |d_ij - d_il|. Constraint
// p_j_l uses 0-based element-column indices; output is byte-stable.
std::string export_ilp(const Graph& g, Variant variant);

}  // namespace mixdim
