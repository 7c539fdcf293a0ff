#include "support/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixdim/distance.hpp"

namespace oracle {

std::vector<std::vector<int>> floyd_warshall(const mixdim::Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (const mixdim::Edge& e : g.edges()) {
        d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                int via = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                          d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (via < d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = via;
                }
            }
        }
    }
    return d;
}

namespace {

void cycle_dfs(const mixdim::Graph& g, int start, int v, std::vector<char>& on_path, int depth,
               int& best) {
    for (int w : g.neighbors(v)) {
        if (w == start && depth >= 3) {
            best = std::min(best, depth);
        } else if (w > start && !on_path[static_cast<std::size_t>(w)] && depth + 1 < best) {
            on_path[static_cast<std::size_t>(w)] = 1;
            cycle_dfs(g, start, w, on_path, depth + 1, best);
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    }
}

}  // namespace

std::optional<int> naive_girth(const mixdim::Graph& g) {
    const int n = g.vertex_count();
    int best = n + 1;
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    // Only cycles whose smallest vertex is the start are explored.
    for (int s = 0; s < n; ++s) {
        on_path[static_cast<std::size_t>(s)] = 1;
        cycle_dfs(g, s, s, on_path, 1, best);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    if (best > n) return std::nullopt;
    return best;
}

BruteForceResult brute_force_dimension(const mixdim::Graph& g, mixdim::Variant v) {
    const int n = g.vertex_count();
    mixdim::DistanceTable table = mixdim::all_pairs_distances(g);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;
        while (true) {
            if (mixdim::verify_generator(table, subset, v).valid()) {
                return BruteForceResult{k, subset};
            }
            // next k-combination of 0..n-1
            int i = k - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    throw std::logic_error("no generator found, even the full vertex set");
}

void enumerate_connected_graphs(int n, const std::function<void(const mixdim::Graph&)>& fn) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    }
    const int p = static_cast<int>(all_pairs.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        std::vector<std::pair<int, int>> edges;
        for (int b = 0; b < p; ++b) {
            if ((mask >> b) & 1) {
                auto [u, v] = all_pairs[static_cast<std::size_t>(b)];
                adj[static_cast<std::size_t>(u)].push_back(v);
                adj[static_cast<std::size_t>(v)].push_back(u);
                edges.emplace_back(u, v);
            }
        }
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n) continue;
        fn(mixdim::Graph::build(n, edges));
    }
}

mixdim::Graph random_tree(int n, std::mt19937& rng) {
    if (n < 2) throw std::invalid_argument("random_tree: n must be >= 2");
    if (n == 2) return mixdim::Graph::build(2, {{0, 1}});

    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& x : pruefer) x = pick(rng);

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];

    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(leaf, x);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i) {
        if (degree[static_cast<std::size_t>(i)] == 1) {
            (u < 0 ? u : v) = i;
        }
    }
    edges.emplace_back(u, v);
    return mixdim::Graph::build(n, edges);
}

mixdim::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);        // outer cycle
        edges.emplace_back(i, 5 + i);              // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return mixdim::Graph::build(10, edges);
}

}  // namespace oracle
