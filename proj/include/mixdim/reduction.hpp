#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixdim/distance.hpp"
#include "mixdim/graph.hpp"
#include "mixdim/solver.hpp"

namespace mixdim {

struct Literal {
    int var;        // 0-based variable index
    bool positive;
    friend bool operator==(const Literal&, const Literal&) = default;
};

// Exactly three literals over three distinct variables per clause.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

enum class CnfErrorKind { malformed, clause_not_three_distinct_vars };

class CnfError : public std::runtime_error {
public:
    CnfError(CnfErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    CnfErrorKind kind() const { return kind_; }

private:
    CnfErrorKind kind_;
};

// DIMACS CNF ("p cnf n m" header, clauses terminated by 0, 'c' comments).
// Clauses must have exactly three literals over three distinct variables;
// repeated variables and both-polarity occurrences are rejected.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);

using Assignment = std::vector<bool>;  // one value per variable

bool evaluate(const CnfFormula& f, const Assignment& t);

// All satisfying assignments in increasing binary order (variable 0 is the
// least significant bit), up to max_count collected.
std::vector<Assignment> satisfying_assignments(const CnfFormula& f, std::size_t max_count);

bool is_satisfiable(const CnfFormula& f);

enum class EdgeRole { truth_component, testing_component, communication, neutralizing, correcting };

std::string edge_role_name(EdgeRole role);

// Output of the 3-SAT construction: the graph, the target r = 2m+n, a full
// vertex-label map (T1,F1,a1,b1,c1,d1 per variable; c1^1..c1^6 per clause)
// and a role tag per canonical edge.
struct ReductionArtifact {
    Graph graph;
    int r = 0;
    int num_vars = 0;
    int num_clauses = 0;
    std::vector<std::string> vertex_labels;      // vertex -> label
    std::map<std::string, int> label_to_vertex;  // label -> vertex
    std::vector<EdgeRole> edge_roles;            // aligned with graph.edges()

    // Truth-setting component X_i, 0-based variable index.
    int t_vertex(int i) const { return 6 * i; }
    int f_vertex(int i) const { return 6 * i + 1; }
    int a_vertex(int i) const { return 6 * i + 2; }
    int b_vertex(int i) const { return 6 * i + 3; }
    int c_vertex(int i) const { return 6 * i + 4; }
    int d_vertex(int i) const { return 6 * i + 5; }

    // Satisfaction-testing component Y_j, 0-based clause index, k in 1..6.
    int clause_vertex(int j, int k) const { return 6 * num_vars + 6 * j + (k - 1); }
};

ReductionArtifact build_reduction(const CnfFormula& f);

// JSON sidecar with r, the label map, and per-edge roles.
std::string reduction_sidecar_json(const ReductionArtifact& a);

enum class ReductionErrorKind {
    incomplete_assignment,
    not_a_generator,
    wrong_cardinality,
    ambiguous_component,
};

class ReductionError : public std::runtime_error {
public:
    ReductionError(ReductionErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ReductionErrorKind kind() const { return kind_; }

private:
    ReductionErrorKind kind_;
};

// The constructive direction: {c_j^5, c_j^6 for all j} plus a_i or b_i per
// the assignment. Always returns a set of size r; it verifies as a mixed
// metric generator exactly when the assignment satisfies the formula.
std::vector<int> assignment_to_generator(const ReductionArtifact& a, const Assignment& t);

// The reverse direction: requires |S| = r and S a valid mixed metric
// generator, then reads the truth value off each truth-setting component.
Assignment generator_to_assignment(const ReductionArtifact& a, const DistanceTable& table,
                                   const std::vector<int>& S);
Assignment generator_to_assignment(const ReductionArtifact& a, const std::vector<int>& S);

// Checks the pair constraints that force the r = 2m+n lower bound: the pair
// (c_j^2, c_j^2c_j^5) is distinguished only by c_j^5, (c_j^3, c_j^3c_j^6)
// only by c_j^6, and (c_i, a_ic_i) only by {a_i, b_i}.
bool confirm_reduction_lower_bound(const ReductionArtifact& a, const DistanceTable& table);

struct EquivalenceConfig {
    int truth_table_max_vars = 10;  // sat-status leg cap
    int exact_max_vars = 3;         // exact-solve leg caps
    int exact_max_clauses = 3;
    SolverConfig solver = {.node_budget = 10'000'000, .max_vertices = 128};
};

struct EquivalenceReport {
    int r = 0;
    int vertices = 0;
    int edges = 0;
    bool lower_bound_confirmed = false;
    std::optional<bool> satisfiable;        // present when the truth-table leg ran
    std::optional<int> mdim;                // present when the exact leg ran
    bool mdim_optimal = false;              // exact leg finished within budget
    std::optional<bool> equivalence_holds;  // satisfiable <=> mdim == r
    std::optional<bool> constructive_ok;    // Lemma direction, first satisfying assignment
};

EquivalenceReport verify_equivalence(const CnfFormula& f, const EquivalenceConfig& cfg = {});

}  // namespace mixdim
