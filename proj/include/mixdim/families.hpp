#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mixdim/graph.hpp"

namespace mixdim {

struct PathSpec {
    int n;  // >= 2
};
struct CycleSpec {
    int n;  // >= 3
};
struct CompleteSpec {
    int n;  // >= 2
};
struct CompleteBipartiteSpec {
    int r;  // >= 2
    int t;  // >= 2
};
struct GridSpec {
    int r;  // >= 2
    int t;  // >= 2; vertex (x,y) has index x*t + y
};
struct TreeSpec {
    int n;
    std::vector<std::pair<int, int>> edges;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteSpec, CompleteBipartiteSpec,
                                GridSpec, TreeSpec>;

enum class FamilyErrorKind { bad_parameter, not_a_tree };

class FamilyError : public std::runtime_error {
public:
    FamilyError(FamilyErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    FamilyErrorKind kind() const { return kind_; }

private:
    FamilyErrorKind kind_;
};

Graph build_family(const FamilySpec& spec);

// Closed-form mixed metric dimension: Path -> 2, Cycle -> 3, Complete -> n,
// K_{r,t} -> r+t-1 when min(r,t)=2 else r+t-2, Grid -> 3, Tree -> leaf count.
int family_mdim(const FamilySpec& spec);

// Textual form: "path:5", "cycle:6", "complete:5", "kb:3,4", "grid:3,4",
// "tree:@file.edges".
FamilySpec parse_family_spec(const std::string& text);

std::string family_name(const FamilySpec& spec);

// Extra context for values that are routed through a different rule, such
// as cycle:3 being the complete graph K_3.
std::optional<std::string> family_note(const FamilySpec& spec);

}  // namespace mixdim
