#include "mixdim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace mixdim {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 2) {
        throw GraphError(GraphErrorKind::too_small,
                         "graph must have at least 2 vertices, got n=" + std::to_string(n));
    }

    Graph g;
    g.n_ = n;
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw GraphError(GraphErrorKind::index_out_of_range,
                             "edge " + edge_str(a, b) + " references a vertex outside 0.." +
                                 std::to_string(n - 1));
        }
        if (a == b) {
            throw GraphError(GraphErrorKind::self_loop,
                             "self-loop at vertex " + std::to_string(a));
        }
        g.edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t k = 1; k < g.edges_.size(); ++k) {
        if (g.edges_[k] == g.edges_[k - 1]) {
            throw GraphError(GraphErrorKind::duplicate_edge,
                             "duplicate edge " + edge_str(g.edges_[k].u, g.edges_[k].v));
        }
    }

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());

    // Connectivity check (DFS from 0).
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adjacency_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)]) {
            throw GraphError(GraphErrorKind::disconnected,
                             "graph is disconnected: vertex " + std::to_string(v) +
                                 " is unreachable from vertex 0");
        }
    }
    return g;
}

std::optional<int> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it != edges_.end() && *it == probe) {
        return static_cast<int>(it - edges_.begin());
    }
    return std::nullopt;
}

namespace {

// Tokenizes the payload lines of an edge-list file, skipping blanks and
// '#' comments.
std::vector<std::string> edge_list_tokens(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

std::optional<int> parse_int(const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
    std::vector<std::string> tokens = edge_list_tokens(in);
    if (tokens.size() < 2) {
        throw ParseError("edge list: missing \"n m\" header");
    }
    auto n = parse_int(tokens[0]);
    auto m = parse_int(tokens[1]);
    if (!n || !m || *n < 0 || *m < 0) {
        throw ParseError("edge list: malformed header \"" + tokens[0] + " " + tokens[1] + "\"");
    }
    std::size_t expected = 2 + 2 * static_cast<std::size_t>(*m);
    if (tokens.size() != expected) {
        throw ParseError("edge list: expected " + std::to_string(*m) + " edges (" +
                         std::to_string(expected - 2) + " endpoint tokens), got " +
                         std::to_string(tokens.size() - 2));
    }

    bool numeric = true;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
        auto v = parse_int(tokens[i]);
        if (!v || *v < 0 || *v >= *n) {
            numeric = false;
            break;
        }
    }

    EdgeListFile out;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(*m));
    if (numeric) {
        for (std::size_t i = 2; i + 1 < tokens.size(); i += 2) {
            edges.emplace_back(*parse_int(tokens[i]), *parse_int(tokens[i + 1]));
        }
    } else {
        out.labeled = true;
        std::map<std::string, int> ids;
        auto intern = [&](const std::string& tok) {
            auto [it, inserted] = ids.emplace(tok, static_cast<int>(out.labels.size()));
            if (inserted) out.labels.push_back(tok);
            return it->second;
        };
        for (std::size_t i = 2; i + 1 < tokens.size(); i += 2) {
            edges.emplace_back(intern(tokens[i]), intern(tokens[i + 1]));
        }
        if (static_cast<int>(out.labels.size()) != *n) {
            throw ParseError("edge list: header says n=" + std::to_string(*n) + " but " +
                             std::to_string(out.labels.size()) + " distinct labels appear");
        }
    }
    out.graph = Graph::build(*n, edges);
    return out;
}

EdgeListFile read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    return out;
}

std::string graph_digest(const Graph& g) {
    std::string text = write_edge_list(g);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

}  // namespace mixdim
