#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixdim/graph.hpp"

namespace mixdim {

// A vertex or an edge. The total order puts all vertices first (by index),
// then all edges (by canonical edge index); this fixes the column order of
// the distance matrix and makes every "first failing pair" deterministic.
struct Element {
    enum class Kind : std::uint8_t { vertex = 0, edge = 1 };

    Kind kind;
    int index;

    static Element vertex(int i) { return {Kind::vertex, i}; }
    static Element edge(int k) { return {Kind::edge, k}; }

    bool is_vertex() const { return kind == Kind::vertex; }
    bool is_edge() const { return kind == Kind::edge; }

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

// "v3" for vertices, "e(2,5)" for edges.
std::string to_string(const Element& x, const Graph& g);

// Hop distances from every vertex to every vertex and every edge. The edge
// column is min over the edge's endpoints.
class DistanceTable {
public:
    int n() const { return n_; }
    int m() const { return m_; }
    int element_count() const { return n_ + m_; }

    int vertex_distance(int i, int j) const {
        return vv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                   static_cast<std::size_t>(j)];
    }
    int edge_distance(int i, int k) const {
        return ve_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
                   static_cast<std::size_t>(k)];
    }

    int distance(int i, const Element& x) const {
        return x.is_vertex() ? vertex_distance(i, x.index) : edge_distance(i, x.index);
    }

    // Column view of the n x (n+m) matrix: vertices then edges.
    int column_distance(int i, int col) const {
        return col < n_ ? vertex_distance(i, col) : edge_distance(i, col - n_);
    }
    Element element_at(int col) const {
        return col < n_ ? Element::vertex(col) : Element::edge(col - n_);
    }
    int column_of(const Element& x) const {
        return x.is_vertex() ? x.index : n_ + x.index;
    }

    friend DistanceTable all_pairs_distances(const Graph& g);

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<int> vv_;  // n*n, row-major
    std::vector<int> ve_;  // n*m, row-major
};

// BFS from every vertex; edge columns derived by the min rule.
DistanceTable all_pairs_distances(const Graph& g);

// Vertices of one shortest cycle, in cycle order; nullopt for trees.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

// Length of a shortest cycle; nullopt marks acyclic.
std::optional<int> girth(const Graph& g);

}  // namespace mixdim
