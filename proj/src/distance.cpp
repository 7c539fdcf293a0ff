#include "mixdim/distance.hpp"

#include <algorithm>

namespace mixdim {

std::string to_string(const Element& x, const Graph& g) {
    if (x.is_vertex()) return "v" + std::to_string(x.index);
    const Edge& e = g.edge(x.index);
    return "e(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

DistanceTable all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();

    DistanceTable t;
    t.n_ = n;
    t.m_ = m;
    t.vv_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    t.ve_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));

    std::vector<int> queue(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        int* dist = &t.vv_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n)];
        dist[s] = 0;
        queue[0] = s;
        std::size_t head = 0, tail = 1;
        while (head < tail) {
            int v = queue[head++];
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }

    for (int i = 0; i < n; ++i) {
        const int* dist = &t.vv_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n)];
        int* edist = &t.ve_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m)];
        for (int k = 0; k < m; ++k) {
            const Edge& e = g.edge(k);
            edist[k] = std::min(dist[e.u], dist[e.v]);
        }
    }
    return t;
}

namespace {

// Shortest cycle through edge (u,v): shortest u-v path avoiding the edge
// itself, plus the edge. Returns the cycle as a vertex list, empty if none.
std::vector<int> cycle_through_edge(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> queue(static_cast<std::size_t>(n));
    dist[static_cast<std::size_t>(u)] = 0;
    queue[0] = u;
    std::size_t head = 0, tail = 1;
    while (head < tail) {
        int x = queue[head++];
        if (x == v) break;
        for (int y : g.neighbors(x)) {
            if (x == u && y == v) continue;  // skip the edge itself
            if (dist[static_cast<std::size_t>(y)] < 0) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                parent[static_cast<std::size_t>(y)] = x;
                queue[tail++] = y;
            }
        }
    }
    if (dist[static_cast<std::size_t>(v)] < 0) return {};
    std::vector<int> path;
    for (int x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // u ... v; closing edge vu completes the cycle
    return path;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    std::vector<int> best;
    for (const Edge& e : g.edges()) {
        std::vector<int> cyc = cycle_through_edge(g, e.u, e.v);
        if (!cyc.empty() && (best.empty() || cyc.size() < best.size())) {
            best = std::move(cyc);
            if (best.size() == 3) break;  // girth cannot be below 3
        }
    }
    if (best.empty()) return std::nullopt;
    return best;
}

std::optional<int> girth(const Graph& g) {
    auto cyc = shortest_cycle(g);
    if (!cyc) return std::nullopt;
    return static_cast<int>(cyc->size());
}

}  // namespace mixdim
