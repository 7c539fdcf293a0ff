#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixdim/distance.hpp"
#include "mixdim/graph.hpp"

namespace mixdim {

// Which pair universe a generator must resolve:
//   dim  - vertex pairs only
//   edim - edge pairs only
//   mdim - all pairs of elements (vertices and edges)
enum class Variant { dim, edim, mdim };

std::string variant_name(Variant v);
std::optional<Variant> parse_variant(const std::string& name);

bool distinguishes(const DistanceTable& t, int w, const Element& x, const Element& y);

struct FailingPair {
    Element first;
    Element second;
};

// Valid, or the lexicographically first pair (under the Element total order)
// that no vertex of the set distinguishes.
struct VerifyResult {
    std::optional<FailingPair> failing;
    bool valid() const { return !failing.has_value(); }
};

// Throws std::invalid_argument on an empty set or out-of-range members.
VerifyResult verify_generator(const DistanceTable& t, const std::vector<int>& generator,
                              Variant variant);

struct StructuralReport {
    std::vector<std::vector<int>> true_twin_classes;   // N[.] equality cells, size >= 2
    std::vector<std::vector<int>> false_twin_classes;  // N(.) equality cells, size >= 2
    std::vector<int> extreme_vertices;                 // N(v) induces a complete graph
    std::vector<int> degree_one_vertices;
    std::vector<std::vector<int>> maximal_neighbours;  // per vertex: u in N(v) with N[v] subset N[u]
    std::vector<int> forced_vertices;                  // union of true-twin cells and extremes
};

StructuralReport structural_report(const Graph& g);

bool every_vertex_has_maximal_neighbour(const Graph& g);

// True iff every neighbour w of v admits a witness x != v with
// d(vw, x) != d(w, x); then V minus {v} is a mixed metric generator.
bool lemma_n_minus_1_condition(const Graph& g, const DistanceTable& t, int v);

}  // namespace mixdim
