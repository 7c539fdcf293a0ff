#include "mixdim/families.hpp"

#include <algorithm>
#include <charconv>

namespace mixdim {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw FamilyError(FamilyErrorKind::bad_parameter, what);
}

Graph build_path(int n) {
    require(n >= 2, "path needs n >= 2, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph build_cycle(int n) {
    require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::build(n, edges);
}

Graph build_complete(int n) {
    require(n >= 2, "complete graph needs n >= 2, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph::build(n, edges);
}

Graph build_complete_bipartite(int r, int t) {
    require(r >= 2 && t >= 2,
            "complete bipartite needs r,t >= 2, got r=" + std::to_string(r) +
                " t=" + std::to_string(t));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < t; ++j) edges.emplace_back(i, r + j);
    }
    return Graph::build(r + t, edges);
}

Graph build_grid(int r, int t) {
    require(r >= 2 && t >= 2,
            "grid needs r,t >= 2, got r=" + std::to_string(r) + " t=" + std::to_string(t));
    std::vector<std::pair<int, int>> edges;
    auto id = [t](int x, int y) { return x * t + y; };
    for (int x = 0; x < r; ++x) {
        for (int y = 0; y < t; ++y) {
            if (y + 1 < t) edges.emplace_back(id(x, y), id(x, y + 1));
            if (x + 1 < r) edges.emplace_back(id(x, y), id(x + 1, y));
        }
    }
    return Graph::build(r * t, edges);
}

Graph build_tree(const TreeSpec& spec) {
    Graph g = [&] {
        try {
            return Graph::build(spec.n, spec.edges);
        } catch (const GraphError& e) {
            if (e.kind() == GraphErrorKind::disconnected) {
                throw FamilyError(FamilyErrorKind::not_a_tree,
                                  std::string("tree input is not connected: ") + e.what());
            }
            throw;
        }
    }();
    if (g.edge_count() != g.vertex_count() - 1) {
        throw FamilyError(FamilyErrorKind::not_a_tree,
                          "tree needs n-1 edges, got n=" + std::to_string(g.vertex_count()) +
                              " m=" + std::to_string(g.edge_count()));
    }
    return g;
}

int leaf_count(const Graph& g) {
    int leaves = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) ++leaves;
    }
    return leaves;
}

std::optional<int> parse_int(std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return build_path(s.n);
            if constexpr (std::is_same_v<T, CycleSpec>) return build_cycle(s.n);
            if constexpr (std::is_same_v<T, CompleteSpec>) return build_complete(s.n);
            if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return build_complete_bipartite(s.r, s.t);
            if constexpr (std::is_same_v<T, GridSpec>) return build_grid(s.r, s.t);
            if constexpr (std::is_same_v<T, TreeSpec>) return build_tree(s);
        },
        spec);
}

int family_mdim(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) {
                require(s.n >= 2, "path needs n >= 2, got " + std::to_string(s.n));
                return 2;
            }
            if constexpr (std::is_same_v<T, CycleSpec>) {
                require(s.n >= 3, "cycle needs n >= 3, got " + std::to_string(s.n));
                return 3;  // n=3 is K_3, whose value is also 3
            }
            if constexpr (std::is_same_v<T, CompleteSpec>) {
                require(s.n >= 2, "complete graph needs n >= 2, got " + std::to_string(s.n));
                return s.n;
            }
            if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) {
                require(s.r >= 2 && s.t >= 2,
                        "complete bipartite needs r,t >= 2, got r=" + std::to_string(s.r) +
                            " t=" + std::to_string(s.t));
                return (s.r == 2 || s.t == 2) ? s.r + s.t - 1 : s.r + s.t - 2;
            }
            if constexpr (std::is_same_v<T, GridSpec>) {
                require(s.r >= 2 && s.t >= 2, "grid needs r,t >= 2, got r=" +
                                                  std::to_string(s.r) + " t=" +
                                                  std::to_string(s.t));
                return 3;
            }
            if constexpr (std::is_same_v<T, TreeSpec>) {
                return leaf_count(build_tree(s));
            }
        },
        spec);
}

FamilySpec parse_family_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw FamilyError(FamilyErrorKind::bad_parameter,
                          "family spec needs the form name:params, got \"" + text + "\"");
    }
    std::string name = text.substr(0, colon);
    std::string params = text.substr(colon + 1);

    auto one_int = [&]() -> int {
        auto v = parse_int(params);
        require(v.has_value(), "family " + name + ": bad parameter \"" + params + "\"");
        return *v;
    };
    auto two_ints = [&]() -> std::pair<int, int> {
        auto comma = params.find(',');
        require(comma != std::string::npos,
                "family " + name + ": expected two parameters, got \"" + params + "\"");
        auto a = parse_int(std::string_view(params).substr(0, comma));
        auto b = parse_int(std::string_view(params).substr(comma + 1));
        require(a.has_value() && b.has_value(),
                "family " + name + ": bad parameters \"" + params + "\"");
        return {*a, *b};
    };

    if (name == "path") return PathSpec{one_int()};
    if (name == "cycle") return CycleSpec{one_int()};
    if (name == "complete") return CompleteSpec{one_int()};
    if (name == "kb") {
        auto [r, t] = two_ints();
        return CompleteBipartiteSpec{r, t};
    }
    if (name == "grid") {
        auto [r, t] = two_ints();
        return GridSpec{r, t};
    }
    if (name == "tree") {
        require(!params.empty() && params[0] == '@',
                "family tree: expected tree:@file.edges, got \"" + text + "\"");
        EdgeListFile file = read_edge_list_file(params.substr(1));
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : file.graph.edges()) edges.emplace_back(e.u, e.v);
        return TreeSpec{file.graph.vertex_count(), std::move(edges)};
    }
    throw FamilyError(FamilyErrorKind::bad_parameter, "unknown family \"" + name + "\"");
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path:" + std::to_string(s.n);
            if constexpr (std::is_same_v<T, CycleSpec>) return "cycle:" + std::to_string(s.n);
            if constexpr (std::is_same_v<T, CompleteSpec>)
                return "complete:" + std::to_string(s.n);
            if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return "kb:" + std::to_string(s.r) + "," + std::to_string(s.t);
            if constexpr (std::is_same_v<T, GridSpec>)
                return "grid:" + std::to_string(s.r) + "," + std::to_string(s.t);
            if constexpr (std::is_same_v<T, TreeSpec>)
                return "tree(n=" + std::to_string(s.n) + ")";
        },
        spec);
}

std::optional<std::string> family_note(const FamilySpec& spec) {
    if (const auto* c = std::get_if<CycleSpec>(&spec); c && c->n == 3) {
        return "cycle:3 is the complete graph K_3; its value follows the complete-graph rule";
    }
    return std::nullopt;
}

}  // namespace mixdim
