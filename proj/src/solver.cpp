#include "mixdim/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mixdim {

std::vector<PairConstraint> build_constraints(const DistanceTable& t, Variant variant) {
    if (t.n() > VertexSet::kCapacity) {
        throw std::invalid_argument("build_constraints: graph has " + std::to_string(t.n()) +
                                    " vertices, bitset capacity is " +
                                    std::to_string(VertexSet::kCapacity));
    }
    int first = 0, last = t.element_count();
    if (variant == Variant::dim) last = t.n();
    if (variant == Variant::edim) first = t.n();

    std::vector<PairConstraint> out;
    for (int j = first; j < last; ++j) {
        for (int l = j + 1; l < last; ++l) {
            PairConstraint c{t.element_at(j), t.element_at(l), {}};
            for (int i = 0; i < t.n(); ++i) {
                if (t.column_distance(i, j) != t.column_distance(i, l)) {
                    c.distinguishers.insert(i);
                }
            }
            if (c.distinguishers.empty()) {
                throw std::logic_error("indistinguishable element pair on a connected graph");
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

namespace {

// Search context fixed for the whole solve.
struct SearchContext {
    std::vector<VertexSet> sets;  // reduced constraint distinguisher sets
    int n = 0;
};

struct SharedState {
    std::atomic<int> best_value;
    std::atomic<long> nodes{0};
    std::atomic<bool> budget_hit{false};
    long node_budget = 0;
    std::mutex basis_mutex;
    std::vector<int> best_basis;  // guarded by basis_mutex

    bool count_node() {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_budget) {
            budget_hit.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    void offer(const VertexSet& chosen, int chosen_count) {
        std::lock_guard<std::mutex> lock(basis_mutex);
        if (chosen_count < best_value.load(std::memory_order_relaxed)) {
            best_value.store(chosen_count, std::memory_order_relaxed);
            best_basis = chosen.to_vector();
        }
    }
};

// Greedy disjoint packing of the available distinguisher sets: each packed
// constraint needs its own vertex, so the pack size bounds the remaining
// cost from below. Sets are visited smallest-first.
int packing_bound(const SearchContext& ctx, const std::vector<int>& unhit,
                  const VertexSet& excluded, std::vector<std::pair<int, int>>& scratch) {
    scratch.clear();
    for (int c : unhit) {
        scratch.emplace_back(ctx.sets[static_cast<std::size_t>(c)].minus(excluded).size(), c);
    }
    std::sort(scratch.begin(), scratch.end());
    VertexSet used;
    int bound = 0;
    for (auto [sz, c] : scratch) {
        VertexSet avail = ctx.sets[static_cast<std::size_t>(c)].minus(excluded);
        if (!avail.intersects(used)) {
            ++bound;
            used |= avail;
        }
    }
    return bound;
}

void dfs(const SearchContext& ctx, SharedState& sh, const VertexSet& chosen, int chosen_count,
         const VertexSet& excluded, const std::vector<int>& unhit) {
    if (!sh.count_node()) return;

    if (unhit.empty()) {
        sh.offer(chosen, chosen_count);
        return;
    }

    // Infeasible if some pair lost all of its distinguishers to exclusion.
    int branch = -1;
    int branch_size = VertexSet::kCapacity + 1;
    for (int c : unhit) {
        int avail = ctx.sets[static_cast<std::size_t>(c)].minus(excluded).size();
        if (avail == 0) return;
        if (avail < branch_size) {
            branch_size = avail;
            branch = c;
        }
    }

    std::vector<std::pair<int, int>> scratch;
    int lb = packing_bound(ctx, unhit, excluded, scratch);
    if (chosen_count + lb >= sh.best_value.load(std::memory_order_relaxed)) return;

    VertexSet candidates = ctx.sets[static_cast<std::size_t>(branch)].minus(excluded);
    VertexSet child_excluded = excluded;
    for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
        VertexSet child_chosen = chosen;
        child_chosen.insert(v);
        std::vector<int> child_unhit;
        child_unhit.reserve(unhit.size());
        for (int c : unhit) {
            if (!ctx.sets[static_cast<std::size_t>(c)].contains(v)) child_unhit.push_back(c);
        }
        dfs(ctx, sh, child_chosen, chosen_count + 1, child_excluded, child_unhit);
        if (sh.budget_hit.load(std::memory_order_relaxed)) return;
        child_excluded.insert(v);  // later branches must not reuse v
    }
}

// Lexicographically smallest hitting set of exactly `target` vertices that
// extends `chosen`. Candidates are scanned in increasing order, so the first
// complete solution found is the smallest one.
bool lex_dfs(const SearchContext& ctx, SharedState& sh, VertexSet& chosen, int chosen_count,
             int target, int next_candidate, const std::vector<int>& unhit,
             std::vector<int>& out) {
    if (!sh.count_node()) return false;
    if (unhit.empty()) {
        if (chosen_count == target) {
            out = chosen.to_vector();
            return true;
        }
        // Pad with the smallest unused vertices; the set stays a generator.
        VertexSet padded = chosen;
        int needed = target - chosen_count;
        for (int v = 0; v < ctx.n && needed > 0; ++v) {
            if (!padded.contains(v)) {
                padded.insert(v);
                --needed;
            }
        }
        if (needed > 0) return false;
        out = padded.to_vector();
        return true;
    }
    if (chosen_count == target) return false;

    // Every open pair must still be hittable by candidates >= next_candidate
    // or by vertices already chosen (impossible: it is unhit), and the number
    // of pairwise disjoint open pairs must fit in the remaining slots.
    VertexSet below;
    for (int v = 0; v < next_candidate; ++v) below.insert(v);
    std::vector<std::pair<int, int>> scratch;
    for (int c : unhit) {
        if (ctx.sets[static_cast<std::size_t>(c)].minus(below).empty()) return false;
    }
    if (chosen_count + packing_bound(ctx, unhit, below, scratch) > target) return false;

    for (int v = next_candidate; v < ctx.n; ++v) {
        if (chosen.contains(v)) continue;
        std::vector<int> child_unhit;
        child_unhit.reserve(unhit.size());
        bool hits = false;
        for (int c : unhit) {
            if (ctx.sets[static_cast<std::size_t>(c)].contains(v)) {
                hits = true;
            } else {
                child_unhit.push_back(c);
            }
        }
        if (!hits) continue;  // only vertices that make progress are worth including
        chosen.insert(v);
        if (lex_dfs(ctx, sh, chosen, chosen_count + 1, target, v + 1, child_unhit, out)) {
            return true;
        }
        chosen.erase(v);
        if (sh.budget_hit.load(std::memory_order_relaxed)) return false;
    }
    return false;
}

}  // namespace

SolveResult solve(const Graph& g, Variant variant, const SolverConfig& cfg) {
    const int n = g.vertex_count();
    const int cap = std::min(cfg.max_vertices, VertexSet::kCapacity);
    if (n > cap) {
        throw std::invalid_argument("solve: graph has " + std::to_string(n) +
                                    " vertices, configured cap is " + std::to_string(cap));
    }

    DistanceTable table = all_pairs_distances(g);
    std::vector<PairConstraint> constraints = build_constraints(table, variant);

    // Forced vertices go straight into the solution; the forcing results
    // hold for mixed metric generators only.
    VertexSet forced;
    int structural_lb = 1;  // a generator is a nonempty vertex set
    if (variant == Variant::mdim) {
        for (int v : structural_report(g).forced_vertices) forced.insert(v);
        structural_lb = lower_bound(g);
    }

    // Unhit distinguisher sets: dedupe, then drop supersets (hitting the
    // subset hits the superset for free).
    std::vector<VertexSet> sets;
    for (const PairConstraint& c : constraints) {
        if (!c.distinguishers.intersects(forced)) sets.push_back(c.distinguishers);
    }
    std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.to_vector() < b.to_vector();
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> reduced;
    for (const VertexSet& s : sets) {
        bool dominated = false;
        for (const VertexSet& kept : reduced) {
            if (kept.is_subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) reduced.push_back(s);
    }

    SearchContext ctx;
    ctx.sets = std::move(reduced);
    ctx.n = n;

    std::vector<int> all_unhit(ctx.sets.size());
    for (std::size_t i = 0; i < ctx.sets.size(); ++i) all_unhit[i] = static_cast<int>(i);

    // Greedy cover as the initial incumbent.
    VertexSet greedy_chosen = forced;
    std::vector<int> greedy_unhit = all_unhit;
    while (!greedy_unhit.empty()) {
        int best_v = -1;
        std::size_t best_hits = 0;
        for (int v = 0; v < n; ++v) {
            if (greedy_chosen.contains(v)) continue;
            std::size_t hits = 0;
            for (int c : greedy_unhit) {
                if (ctx.sets[static_cast<std::size_t>(c)].contains(v)) ++hits;
            }
            if (hits > best_hits) {
                best_hits = hits;
                best_v = v;
            }
        }
        greedy_chosen.insert(best_v);
        std::vector<int> rest;
        for (int c : greedy_unhit) {
            if (!ctx.sets[static_cast<std::size_t>(c)].contains(best_v)) rest.push_back(c);
        }
        greedy_unhit = std::move(rest);
    }
    // A generator is a nonempty vertex set; pad the degenerate no-constraint
    // case (single-edge graph under edim) to one vertex.
    if (greedy_chosen.empty()) greedy_chosen.insert(0);

    SharedState sh;
    sh.node_budget = cfg.node_budget;
    sh.best_value.store(greedy_chosen.size());
    sh.best_basis = greedy_chosen.to_vector();

    std::vector<std::pair<int, int>> scratch;
    int root_lb = std::max(structural_lb,
                           forced.size() + packing_bound(ctx, all_unhit, VertexSet{}, scratch));
    root_lb = std::max(root_lb, 1);
    const int initial_upper = greedy_chosen.size();

    if (root_lb < initial_upper && !all_unhit.empty()) {
        // Branch the root by hand so the branches can run concurrently.
        int branch = -1;
        int branch_size = VertexSet::kCapacity + 1;
        for (int c : all_unhit) {
            int sz = ctx.sets[static_cast<std::size_t>(c)].size();
            if (sz < branch_size) {
                branch_size = sz;
                branch = c;
            }
        }
        VertexSet candidates = ctx.sets[static_cast<std::size_t>(branch)];

        struct RootBranch {
            VertexSet chosen;
            VertexSet excluded;
            std::vector<int> unhit;
        };
        std::vector<RootBranch> branches;
        VertexSet excluded;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            RootBranch b;
            b.chosen = forced;
            b.chosen.insert(v);
            b.excluded = excluded;
            for (int c : all_unhit) {
                if (!ctx.sets[static_cast<std::size_t>(c)].contains(v)) b.unhit.push_back(c);
            }
            branches.push_back(std::move(b));
            excluded.insert(v);
        }

        if (cfg.parallel && branches.size() > 1) {
            std::vector<std::thread> workers;
            workers.reserve(branches.size());
            for (const RootBranch& b : branches) {
                workers.emplace_back([&ctx, &sh, &b, &forced]() {
                    dfs(ctx, sh, b.chosen, forced.size() + 1, b.excluded, b.unhit);
                });
            }
            for (auto& w : workers) w.join();
        } else {
            for (const RootBranch& b : branches) {
                dfs(ctx, sh, b.chosen, forced.size() + 1, b.excluded, b.unhit);
                if (sh.budget_hit.load()) break;
            }
        }
    }

    SolveResult result;
    result.variant = variant;
    result.value = sh.best_value.load();
    result.basis = sh.best_basis;
    result.lower_bound = std::min(root_lb, result.value);
    result.upper_bound = initial_upper;
    result.status = sh.budget_hit.load() ? SolveStatus::budget_exceeded : SolveStatus::optimal;

    if (cfg.canonical && result.status == SolveStatus::optimal) {
        VertexSet chosen = forced;
        std::vector<int> canonical_basis;
        bool found = lex_dfs(ctx, sh, chosen, forced.size(), result.value, 0, all_unhit,
                             canonical_basis);
        if (found) {
            result.basis = std::move(canonical_basis);
        } else {
            // Budget ran out mid-restart: the value stands but the canonical
            // basis contract cannot be certified.
            result.status = SolveStatus::budget_exceeded;
        }
    }

    result.nodes_explored = sh.nodes.load();
    return result;
}

int lower_bound(const Graph& g) {
    StructuralReport rep = structural_report(g);
    std::vector<char> forced(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : rep.forced_vertices) forced[static_cast<std::size_t>(v)] = 1;

    int bound = static_cast<int>(rep.forced_vertices.size());
    for (const auto& cell : rep.false_twin_classes) {
        int in_forced = 0;
        for (int v : cell) in_forced += forced[static_cast<std::size_t>(v)];
        int needed = static_cast<int>(cell.size()) - 1 - in_forced;
        if (needed > 0) bound += needed;
    }
    return std::max(2, bound);
}

GirthBound upper_bound_girth(const Graph& g) {
    auto cyc = shortest_cycle(g);
    if (!cyc) {
        return GirthBound{g.vertex_count(), std::nullopt};
    }
    int value = g.vertex_count() - static_cast<int>(cyc->size()) + 3;
    return GirthBound{value, std::move(cyc)};
}

std::string export_ilp(const Graph& g, Variant variant) {
    DistanceTable t = all_pairs_distances(g);
    const int n = t.n();
    int first = 0, last = t.element_count();
    if (variant == Variant::dim) last = n;
    if (variant == Variant::edim) first = n;

    std::string out;
    out += "\\ " + variant_name(variant) + " model: n=" + std::to_string(n) +
           " m=" + std::to_string(t.m()) + "\n";
    out += "Minimize\n obj:";
    for (int i = 0; i < n; ++i) {
        out += (i == 0 ? " y_" : " + y_") + std::to_string(i);
    }
    out += "\nSubject To\n";
    for (int j = first; j < last; ++j) {
        for (int l = j + 1; l < last; ++l) {
            out += " p_" + std::to_string(j) + "_" + std::to_string(l) + ":";
            bool any = false;
            for (int i = 0; i < n; ++i) {
                int coeff = std::abs(t.column_distance(i, j) - t.column_distance(i, l));
                if (coeff == 0) continue;
                out += any ? " + " : " ";
                if (coeff != 1) out += std::to_string(coeff) + " ";
                out += "y_" + std::to_string(i);
                any = true;
            }
            if (!any) {
                throw std::logic_error("indistinguishable element pair on a connected graph");
            }
            out += " >= 1\n";
        }
    }
    out += "Binary\n";
    for (int i = 0; i < n; ++i) {
        out += " y_" + std::to_string(i) + "\n";
    }
    out += "End\n";
    return out;
}

}  // namespace mixdim
