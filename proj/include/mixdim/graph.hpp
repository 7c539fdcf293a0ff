#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mixdim {

enum class GraphErrorKind {
    self_loop,
    duplicate_edge,
    disconnected,
    too_small,
    index_out_of_range,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

// Canonical edge: u < v.
struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple connected undirected graph over dense vertex indices 0..n-1.
// Edges are kept sorted in canonical (u,v) lexicographic order; the edge
// index is the edge's identity everywhere else in the library.
class Graph {
public:
    // Validates and canonicalizes. Throws GraphError naming the offending
    // datum: self loops, duplicate edges, out-of-range endpoints, n < 2,
    // and disconnected inputs are all hard errors.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int k) const { return edges_[static_cast<std::size_t>(k)]; }

    // Neighbors in increasing order.
    const std::vector<int>& neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }
    int degree(int v) const {
        return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
    }

    std::optional<int> edge_index(int u, int v) const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// Blank lines and lines starting with '#' are ignored. Vertex tokens are
// either all 0-based integers, or arbitrary string labels which get mapped
// to dense indices in order of first appearance (labels records the map).
struct EdgeListFile {
    Graph graph;
    bool labeled = false;
    std::vector<std::string> labels;  // index -> original token, labeled mode only
};

EdgeListFile read_edge_list(std::istream& in);
EdgeListFile read_edge_list_file(const std::string& path);

// Canonical serialization; also the input of the graph digest.
std::string write_edge_list(const Graph& g);

// 64-bit FNV-1a over the canonical edge-list serialization, as a fixed-width
// hex string. Stable across runs and platforms.
std::string graph_digest(const Graph& g);

}  // namespace mixdim
