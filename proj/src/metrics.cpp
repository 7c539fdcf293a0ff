#include "mixdim/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace mixdim {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::dim: return "dim";
        case Variant::edim: return "edim";
        case Variant::mdim: return "mdim";
    }
    return "?";
}

std::optional<Variant> parse_variant(const std::string& name) {
    if (name == "dim") return Variant::dim;
    if (name == "edim") return Variant::edim;
    if (name == "mdim") return Variant::mdim;
    return std::nullopt;
}

bool distinguishes(const DistanceTable& t, int w, const Element& x, const Element& y) {
    return t.distance(w, x) != t.distance(w, y);
}

namespace {

// Column range [first, last) of a variant's elements in the D matrix.
void variant_columns(const DistanceTable& t, Variant v, int& first, int& last) {
    switch (v) {
        case Variant::dim:
            first = 0;
            last = t.n();
            break;
        case Variant::edim:
            first = t.n();
            last = t.element_count();
            break;
        case Variant::mdim:
            first = 0;
            last = t.element_count();
            break;
    }
}

}  // namespace

VerifyResult verify_generator(const DistanceTable& t, const std::vector<int>& generator,
                              Variant variant) {
    if (generator.empty()) {
        throw std::invalid_argument("verify_generator: generator set is empty");
    }
    for (int w : generator) {
        if (w < 0 || w >= t.n()) {
            throw std::invalid_argument("verify_generator: vertex " + std::to_string(w) +
                                        " out of range");
        }
    }

    int first = 0, last = 0;
    variant_columns(t, variant, first, last);
    for (int j = first; j < last; ++j) {
        for (int l = j + 1; l < last; ++l) {
            bool separated = false;
            for (int w : generator) {
                if (t.column_distance(w, j) != t.column_distance(w, l)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                return VerifyResult{FailingPair{t.element_at(j), t.element_at(l)}};
            }
        }
    }
    return VerifyResult{};
}

namespace {

// Word-packed neighbourhood rows; n is not capacity-limited here.
struct NeighbourhoodRows {
    int words;
    std::vector<std::uint64_t> open;    // n * words
    std::vector<std::uint64_t> closed;  // n * words

    explicit NeighbourhoodRows(const Graph& g) {
        const int n = g.vertex_count();
        words = (n + 63) / 64;
        open.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words), 0);
        closed.assign(open.size(), 0);
        for (int v = 0; v < n; ++v) {
            for (int w : g.neighbors(v)) {
                set(open, v, w);
                set(closed, v, w);
            }
            set(closed, v, v);
        }
    }

    void set(std::vector<std::uint64_t>& rows, int v, int bit) {
        rows[static_cast<std::size_t>(v) * static_cast<std::size_t>(words) +
             static_cast<std::size_t>(bit / 64)] |= std::uint64_t{1} << (bit % 64);
    }

    const std::uint64_t* row(const std::vector<std::uint64_t>& rows, int v) const {
        return &rows[static_cast<std::size_t>(v) * static_cast<std::size_t>(words)];
    }

    bool row_subset(const std::uint64_t* a, const std::uint64_t* b) const {
        for (int i = 0; i < words; ++i) {
            if ((a[i] & ~b[i]) != 0) return false;
        }
        return true;
    }

    bool row_equal(const std::uint64_t* a, const std::uint64_t* b) const {
        for (int i = 0; i < words; ++i) {
            if (a[i] != b[i]) return false;
        }
        return true;
    }

    std::uint64_t row_hash(const std::uint64_t* a) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (int i = 0; i < words; ++i) {
            h ^= a[i];
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// Cells of size >= 2 under row equality, each cell sorted, cells ordered by
// their smallest member.
std::vector<std::vector<int>> equality_classes(const NeighbourhoodRows& nb,
                                               const std::vector<std::uint64_t>& rows, int n) {
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    for (int v = 0; v < n; ++v) {
        buckets[nb.row_hash(nb.row(rows, v))].push_back(v);
    }
    std::vector<std::vector<int>> cells;
    for (auto& [h, bucket] : buckets) {
        // Resolve hash collisions by pairwise row comparison within a bucket.
        std::vector<char> used(bucket.size(), 0);
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            if (used[i]) continue;
            std::vector<int> cell = {bucket[i]};
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                if (!used[j] &&
                    nb.row_equal(nb.row(rows, bucket[i]), nb.row(rows, bucket[j]))) {
                    used[j] = 1;
                    cell.push_back(bucket[j]);
                }
            }
            if (cell.size() >= 2) cells.push_back(std::move(cell));
        }
    }
    for (auto& cell : cells) std::sort(cell.begin(), cell.end());
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

StructuralReport structural_report(const Graph& g) {
    const int n = g.vertex_count();
    NeighbourhoodRows nb(g);

    StructuralReport rep;
    rep.true_twin_classes = equality_classes(nb, nb.closed, n);
    rep.false_twin_classes = equality_classes(nb, nb.open, n);

    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 1) rep.degree_one_vertices.push_back(v);
        bool extreme = true;
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size() && extreme; ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!g.edge_index(nbrs[i], nbrs[j])) {
                    extreme = false;
                    break;
                }
            }
        }
        if (extreme) rep.extreme_vertices.push_back(v);
    }

    rep.maximal_neighbours.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        for (int u : g.neighbors(v)) {
            if (nb.row_subset(nb.row(nb.closed, v), nb.row(nb.closed, u))) {
                rep.maximal_neighbours[static_cast<std::size_t>(v)].push_back(u);
            }
        }
    }

    std::vector<char> forced(static_cast<std::size_t>(n), 0);
    for (const auto& cell : rep.true_twin_classes) {
        for (int v : cell) forced[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : rep.extreme_vertices) forced[static_cast<std::size_t>(v)] = 1;
    for (int v = 0; v < n; ++v) {
        if (forced[static_cast<std::size_t>(v)]) rep.forced_vertices.push_back(v);
    }
    return rep;
}

bool every_vertex_has_maximal_neighbour(const Graph& g) {
    const int n = g.vertex_count();
    NeighbourhoodRows nb(g);
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (int u : g.neighbors(v)) {
            if (nb.row_subset(nb.row(nb.closed, v), nb.row(nb.closed, u))) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool lemma_n_minus_1_condition(const Graph& g, const DistanceTable& t, int v) {
    if (v < 0 || v >= g.vertex_count()) {
        throw std::invalid_argument("lemma_n_minus_1_condition: vertex " + std::to_string(v) +
                                    " out of range");
    }
    for (int w : g.neighbors(v)) {
        int k = *g.edge_index(v, w);
        bool witness = false;
        for (int x = 0; x < g.vertex_count(); ++x) {
            if (x == v) continue;
            if (t.edge_distance(x, k) != t.vertex_distance(x, w)) {
                witness = true;
                break;
            }
        }
        if (!witness) return false;
    }
    return true;
}

}  // namespace mixdim
