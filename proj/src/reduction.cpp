#include "mixdim/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "mixdim/metrics.hpp"

namespace mixdim {

CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    bool have_header = false;
    int n = 0, m = 0;
    std::vector<int> literals;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            std::istringstream ls(line);
            std::string p, cnf;
            if (have_header || !(ls >> p >> cnf >> n >> m) || cnf != "cnf" || n < 1 || m < 1) {
                throw CnfError(CnfErrorKind::malformed, "bad DIMACS header: \"" + line + "\"");
            }
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        int lit;
        while (ls >> lit) literals.push_back(lit);
        if (!ls.eof()) {
            throw CnfError(CnfErrorKind::malformed, "non-integer token in clause line: \"" + line + "\"");
        }
    }
    if (!have_header) {
        throw CnfError(CnfErrorKind::malformed, "missing \"p cnf n m\" header");
    }

    CnfFormula f;
    f.num_vars = n;
    std::vector<Literal> clause;
    for (int lit : literals) {
        if (lit == 0) {
            if (clause.size() != 3) {
                throw CnfError(CnfErrorKind::clause_not_three_distinct_vars,
                               "clause " + std::to_string(f.clauses.size() + 1) + " has " +
                                   std::to_string(clause.size()) + " literals, expected 3");
            }
            for (int i = 0; i < 3; ++i) {
                for (int j = i + 1; j < 3; ++j) {
                    if (clause[static_cast<std::size_t>(i)].var ==
                        clause[static_cast<std::size_t>(j)].var) {
                        throw CnfError(CnfErrorKind::clause_not_three_distinct_vars,
                                       "clause " + std::to_string(f.clauses.size() + 1) +
                                           " repeats variable " +
                                           std::to_string(clause[static_cast<std::size_t>(i)].var + 1));
                    }
                }
            }
            f.clauses.push_back({clause[0], clause[1], clause[2]});
            clause.clear();
            continue;
        }
        int var = std::abs(lit) - 1;
        if (var >= n) {
            throw CnfError(CnfErrorKind::malformed,
                           "literal " + std::to_string(lit) + " exceeds declared " +
                               std::to_string(n) + " variables");
        }
        clause.push_back(Literal{var, lit > 0});
    }
    if (!clause.empty()) {
        throw CnfError(CnfErrorKind::malformed, "last clause is not terminated by 0");
    }
    if (f.clauses.empty()) {
        throw CnfError(CnfErrorKind::malformed, "formula has no clauses");
    }
    if (f.num_clauses() != m) {
        throw CnfError(CnfErrorKind::malformed,
                       "header declares " + std::to_string(m) + " clauses, found " +
                           std::to_string(f.num_clauses()));
    }
    return f;
}

CnfFormula parse_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CnfError(CnfErrorKind::malformed, "cannot open file: " + path);
    return parse_cnf(in);
}

bool evaluate(const CnfFormula& f, const Assignment& t) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (const Literal& lit : clause) {
            if (t[static_cast<std::size_t>(lit.var)] == lit.positive) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::vector<Assignment> satisfying_assignments(const CnfFormula& f, std::size_t max_count) {
    if (f.num_vars > 30) {
        throw std::invalid_argument("satisfying_assignments: truth table over " +
                                    std::to_string(f.num_vars) + " variables is too large");
    }
    std::vector<Assignment> out;
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    Assignment t(static_cast<std::size_t>(f.num_vars));
    for (std::uint64_t bits = 0; bits < total && out.size() < max_count; ++bits) {
        for (int i = 0; i < f.num_vars; ++i) t[static_cast<std::size_t>(i)] = (bits >> i) & 1;
        if (evaluate(f, t)) out.push_back(t);
    }
    return out;
}

bool is_satisfiable(const CnfFormula& f) {
    return !satisfying_assignments(f, 1).empty();
}

std::string edge_role_name(EdgeRole role) {
    switch (role) {
        case EdgeRole::truth_component: return "truth-component";
        case EdgeRole::testing_component: return "testing-component";
        case EdgeRole::communication: return "communication";
        case EdgeRole::neutralizing: return "neutralizing";
        case EdgeRole::correcting: return "correcting";
    }
    return "?";
}

ReductionArtifact build_reduction(const CnfFormula& f) {
    const int n = f.num_vars;
    const int m = f.num_clauses();

    ReductionArtifact a;
    a.num_vars = n;
    a.num_clauses = m;
    a.r = 2 * m + n;

    struct TaggedEdge {
        Edge e;
        EdgeRole role;
    };
    std::vector<TaggedEdge> tagged;
    auto add = [&tagged](int u, int v, EdgeRole role) {
        tagged.push_back({{std::min(u, v), std::max(u, v)}, role});
    };

    for (int i = 0; i < n; ++i) {
        add(a.t_vertex(i), a.c_vertex(i), EdgeRole::truth_component);
        add(a.a_vertex(i), a.c_vertex(i), EdgeRole::truth_component);
        add(a.a_vertex(i), a.b_vertex(i), EdgeRole::truth_component);
        add(a.b_vertex(i), a.d_vertex(i), EdgeRole::truth_component);
        add(a.c_vertex(i), a.d_vertex(i), EdgeRole::truth_component);
        add(a.d_vertex(i), a.f_vertex(i), EdgeRole::truth_component);
    }
    for (int j = 0; j < m; ++j) {
        add(a.clause_vertex(j, 1), a.clause_vertex(j, 2), EdgeRole::testing_component);
        add(a.clause_vertex(j, 2), a.clause_vertex(j, 5), EdgeRole::testing_component);
        add(a.clause_vertex(j, 1), a.clause_vertex(j, 3), EdgeRole::testing_component);
        add(a.clause_vertex(j, 2), a.clause_vertex(j, 4), EdgeRole::testing_component);
        add(a.clause_vertex(j, 6), a.clause_vertex(j, 3), EdgeRole::testing_component);
        add(a.clause_vertex(j, 3), a.clause_vertex(j, 4), EdgeRole::testing_component);
    }
    for (int j = 0; j < m; ++j) {
        std::vector<char> occurs(static_cast<std::size_t>(n), 0);
        for (const Literal& lit : f.clauses[static_cast<std::size_t>(j)]) {
            occurs[static_cast<std::size_t>(lit.var)] = 1;
            if (lit.positive) {
                add(a.t_vertex(lit.var), a.clause_vertex(j, 1), EdgeRole::communication);
                add(a.f_vertex(lit.var), a.clause_vertex(j, 2), EdgeRole::communication);
            } else {
                add(a.t_vertex(lit.var), a.clause_vertex(j, 2), EdgeRole::communication);
                add(a.f_vertex(lit.var), a.clause_vertex(j, 1), EdgeRole::communication);
            }
        }
        for (int k = 0; k < n; ++k) {
            if (!occurs[static_cast<std::size_t>(k)]) {
                add(a.t_vertex(k), a.clause_vertex(j, 2), EdgeRole::neutralizing);
            }
        }
    }
    for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
            add(a.clause_vertex(j, 2), a.clause_vertex(k, 2), EdgeRole::correcting);
        }
    }

    std::sort(tagged.begin(), tagged.end(),
              [](const TaggedEdge& x, const TaggedEdge& y) { return x.e < y.e; });

    std::vector<std::pair<int, int>> edges;
    edges.reserve(tagged.size());
    a.edge_roles.reserve(tagged.size());
    for (const TaggedEdge& te : tagged) {
        edges.emplace_back(te.e.u, te.e.v);
        a.edge_roles.push_back(te.role);
    }
    a.graph = Graph::build(6 * (n + m), edges);

    a.vertex_labels.resize(static_cast<std::size_t>(6 * (n + m)));
    auto label = [&a](int v, const std::string& name) {
        a.vertex_labels[static_cast<std::size_t>(v)] = name;
        a.label_to_vertex[name] = v;
    };
    for (int i = 0; i < n; ++i) {
        const std::string idx = std::to_string(i + 1);
        label(a.t_vertex(i), "T" + idx);
        label(a.f_vertex(i), "F" + idx);
        label(a.a_vertex(i), "a" + idx);
        label(a.b_vertex(i), "b" + idx);
        label(a.c_vertex(i), "c" + idx);
        label(a.d_vertex(i), "d" + idx);
    }
    for (int j = 0; j < m; ++j) {
        for (int k = 1; k <= 6; ++k) {
            label(a.clause_vertex(j, k),
                  "c" + std::to_string(j + 1) + "^" + std::to_string(k));
        }
    }
    return a;
}

std::string reduction_sidecar_json(const ReductionArtifact& a) {
    nlohmann::json j;
    j["schema"] = "mixdim/1";
    j["r"] = a.r;
    j["num_vars"] = a.num_vars;
    j["num_clauses"] = a.num_clauses;
    j["vertices"] = a.graph.vertex_count();
    j["edges"] = a.graph.edge_count();
    j["labels"] = a.label_to_vertex;
    j["vertex_labels"] = a.vertex_labels;
    nlohmann::json roles = nlohmann::json::array();
    for (int k = 0; k < a.graph.edge_count(); ++k) {
        const Edge& e = a.graph.edge(k);
        roles.push_back({{"u", e.u},
                         {"v", e.v},
                         {"role", edge_role_name(a.edge_roles[static_cast<std::size_t>(k)])}});
    }
    j["edge_roles"] = roles;
    return j.dump(2) + "\n";
}

std::vector<int> assignment_to_generator(const ReductionArtifact& a, const Assignment& t) {
    if (static_cast<int>(t.size()) != a.num_vars) {
        throw ReductionError(ReductionErrorKind::incomplete_assignment,
                             "assignment covers " + std::to_string(t.size()) + " of " +
                                 std::to_string(a.num_vars) + " variables");
    }
    std::vector<int> S;
    S.reserve(static_cast<std::size_t>(a.r));
    for (int i = 0; i < a.num_vars; ++i) {
        S.push_back(t[static_cast<std::size_t>(i)] ? a.a_vertex(i) : a.b_vertex(i));
    }
    for (int j = 0; j < a.num_clauses; ++j) {
        S.push_back(a.clause_vertex(j, 5));
        S.push_back(a.clause_vertex(j, 6));
    }
    std::sort(S.begin(), S.end());
    return S;
}

Assignment generator_to_assignment(const ReductionArtifact& a, const DistanceTable& table,
                                   const std::vector<int>& S) {
    if (static_cast<int>(S.size()) != a.r) {
        throw ReductionError(ReductionErrorKind::wrong_cardinality,
                             "generator has " + std::to_string(S.size()) + " vertices, target r=" +
                                 std::to_string(a.r));
    }
    VerifyResult vr = verify_generator(table, S, Variant::mdim);
    if (!vr.valid()) {
        throw ReductionError(ReductionErrorKind::not_a_generator,
                             "set fails to distinguish " +
                                 to_string(vr.failing->first, a.graph) + " and " +
                                 to_string(vr.failing->second, a.graph));
    }

    std::vector<char> in_S(static_cast<std::size_t>(a.graph.vertex_count()), 0);
    for (int v : S) in_S[static_cast<std::size_t>(v)] = 1;

    Assignment t(static_cast<std::size_t>(a.num_vars));
    for (int i = 0; i < a.num_vars; ++i) {
        std::vector<int> picked;
        for (int v = 6 * i; v < 6 * (i + 1); ++v) {
            if (in_S[static_cast<std::size_t>(v)]) picked.push_back(v);
        }
        if (picked.size() != 1 || (picked[0] != a.a_vertex(i) && picked[0] != a.b_vertex(i))) {
            throw ReductionError(ReductionErrorKind::ambiguous_component,
                                 "truth-setting component of variable " + std::to_string(i + 1) +
                                     " does not hold exactly one of {a,b}");
        }
        t[static_cast<std::size_t>(i)] = (picked[0] == a.a_vertex(i));
    }
    return t;
}

Assignment generator_to_assignment(const ReductionArtifact& a, const std::vector<int>& S) {
    DistanceTable table = all_pairs_distances(a.graph);
    return generator_to_assignment(a, table, S);
}

namespace {

// Vertices with differing distance to the two elements.
std::vector<int> pair_distinguishers(const DistanceTable& t, const Element& x, const Element& y) {
    std::vector<int> out;
    for (int w = 0; w < t.n(); ++w) {
        if (t.distance(w, x) != t.distance(w, y)) out.push_back(w);
    }
    return out;
}

}  // namespace

bool confirm_reduction_lower_bound(const ReductionArtifact& a, const DistanceTable& table) {
    const Graph& g = a.graph;
    for (int j = 0; j < a.num_clauses; ++j) {
        auto e25 = g.edge_index(a.clause_vertex(j, 2), a.clause_vertex(j, 5));
        auto e36 = g.edge_index(a.clause_vertex(j, 3), a.clause_vertex(j, 6));
        if (!e25 || !e36) return false;
        if (pair_distinguishers(table, Element::vertex(a.clause_vertex(j, 2)),
                                Element::edge(*e25)) !=
            std::vector<int>{a.clause_vertex(j, 5)}) {
            return false;
        }
        if (pair_distinguishers(table, Element::vertex(a.clause_vertex(j, 3)),
                                Element::edge(*e36)) !=
            std::vector<int>{a.clause_vertex(j, 6)}) {
            return false;
        }
    }
    for (int i = 0; i < a.num_vars; ++i) {
        auto eac = g.edge_index(a.a_vertex(i), a.c_vertex(i));
        if (!eac) return false;
        if (pair_distinguishers(table, Element::vertex(a.c_vertex(i)), Element::edge(*eac)) !=
            std::vector<int>{a.a_vertex(i), a.b_vertex(i)}) {
            return false;
        }
    }
    return true;
}

EquivalenceReport verify_equivalence(const CnfFormula& f, const EquivalenceConfig& cfg) {
    ReductionArtifact artifact = build_reduction(f);
    DistanceTable table = all_pairs_distances(artifact.graph);

    EquivalenceReport rep;
    rep.r = artifact.r;
    rep.vertices = artifact.graph.vertex_count();
    rep.edges = artifact.graph.edge_count();
    rep.lower_bound_confirmed = confirm_reduction_lower_bound(artifact, table);

    std::optional<Assignment> witness;
    if (f.num_vars <= cfg.truth_table_max_vars) {
        auto sats = satisfying_assignments(f, 1);
        rep.satisfiable = !sats.empty();
        if (!sats.empty()) witness = std::move(sats.front());
    }

    if (witness) {
        std::vector<int> S = assignment_to_generator(artifact, *witness);
        bool ok = static_cast<int>(S.size()) == artifact.r &&
                  verify_generator(table, S, Variant::mdim).valid();
        if (ok) {
            ok = generator_to_assignment(artifact, table, S) == *witness;
        }
        rep.constructive_ok = ok;
    }

    if (f.num_vars <= cfg.exact_max_vars && f.num_clauses() <= cfg.exact_max_clauses) {
        SolveResult res = solve(artifact.graph, Variant::mdim, cfg.solver);
        rep.mdim = res.value;
        rep.mdim_optimal = res.optimal();
        if (rep.satisfiable.has_value() && res.optimal()) {
            rep.equivalence_holds = (*rep.satisfiable == (res.value == artifact.r));
        }
    }
    return rep;
}

}  // namespace mixdim
