#pragma once

// Independent oracles for cross-checking the library: different algorithms
// on purpose, kept apart from the implementation paths they validate.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "mixdim/graph.hpp"
#include "mixdim/metrics.hpp"

namespace oracle {

// All-pairs vertex distances by Floyd-Warshall on the adjacency matrix
// (the library uses per-vertex BFS).
std::vector<std::vector<int>> floyd_warshall(const mixdim::Graph& g);

// Girth by exhaustive DFS enumeration of simple cycles.
std::optional<int> naive_girth(const mixdim::Graph& g);

struct BruteForceResult {
    int value;
    std::vector<int> basis;  // first valid subset in lexicographic order
};

// Smallest-k subset enumeration: tries every k-subset of vertices in
// lexicographic order, smallest k first, against verify_generator.
BruteForceResult brute_force_dimension(const mixdim::Graph& g, mixdim::Variant v);

// Calls fn for every labeled connected graph on n vertices.
void enumerate_connected_graphs(int n, const std::function<void(const mixdim::Graph&)>& fn);

// Uniform random labeled tree via a Pruefer sequence.
mixdim::Graph random_tree(int n, std::mt19937& rng);

mixdim::Graph petersen();

}  // namespace oracle
