#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixdim/families.hpp"
#include "mixdim/graph.hpp"
#include "mixdim/metrics.hpp"
#include "mixdim/reduction.hpp"
#include "mixdim/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidGraph = 3;
constexpr int kExitBudget = 4;

struct CommonOpts {
    bool as_json = false;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json make_report(const std::string& command, const std::string& digest, json results,
                 const Timer& timer, json stats = json::object()) {
    json report;
    report["schema"] = "mixdim/1";
    report["command"] = command;
    report["input_digest"] = digest;
    report["results"] = std::move(results);
    report["timing"] = {{"total_ms", timer.ms()}};
    report["stats"] = std::move(stats);
    return report;
}

void emit(const CommonOpts& opts, const json& report, const std::string& human) {
    if (opts.as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

// Accepts vertex indices, or labels when the graph file was labeled.
std::vector<int> parse_vertex_set(const std::string& text, const mixdim::EdgeListFile& file) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty()) {
            throw mixdim::ParseError("--set: empty vertex token in \"" + text + "\"");
        }
        bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
        if (numeric) {
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw mixdim::ParseError("--set: bad vertex token \"" + tok + "\"");
            }
        } else {
            auto it = std::find(file.labels.begin(), file.labels.end(), tok);
            if (it == file.labels.end()) {
                throw mixdim::ParseError("--set: unknown vertex label \"" + tok + "\"");
            }
            out.push_back(static_cast<int>(it - file.labels.begin()));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

json solve_result_json(const mixdim::SolveResult& r) {
    return json{{"value", r.value},
                {"basis", r.basis},
                {"lower_bound", r.lower_bound},
                {"upper_bound", r.upper_bound},
                {"optimal", r.optimal()}};
}

std::string join_args(int argc, char** argv) {
    std::string cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd += " ";
        cmd += argv[i];
    }
    return cmd;
}

std::vector<mixdim::Variant> variants_for(const std::string& flag) {
    if (flag == "all") {
        return {mixdim::Variant::dim, mixdim::Variant::edim, mixdim::Variant::mdim};
    }
    auto v = mixdim::parse_variant(flag);
    if (!v) throw mixdim::ParseError("unknown variant \"" + flag + "\"");
    return {*v};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed metric dimension toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string command_echo = join_args(argc, argv);

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "exact dim/edim/mdim of a graph");
    std::string solve_file, solve_variant = "mdim";
    mixdim::SolverConfig solver_cfg;
    solve_cmd->add_option("graph", solve_file, "edge-list file")->required();
    solve_cmd->add_option("--variant", solve_variant, "dim|edim|mdim|all (default mdim)");
    solve_cmd->add_flag("--canonical", solver_cfg.canonical,
                        "return the lexicographically smallest basis");
    solve_cmd->add_flag("--parallel", solver_cfg.parallel, "explore root branches concurrently");
    solve_cmd->add_option("--node-budget", solver_cfg.node_budget, "search node cap");
    solve_cmd->add_option("--max-vertices", solver_cfg.max_vertices,
                          "vertex cap for the exact search (up to 128)");
    solve_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a vertex set against a variant");
    std::string verify_file, verify_set, verify_variant = "mdim";
    verify_cmd->add_option("graph", verify_file, "edge-list file")->required();
    verify_cmd->add_option("--set", verify_set, "comma-separated vertices")->required();
    verify_cmd->add_option("--variant", verify_variant, "dim|edim|mdim (default mdim)");
    verify_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    // family
    auto* family_cmd = app.add_subcommand("family", "closed-form values for graph families");
    std::string family_spec_text, family_emit;
    bool family_solve = false;
    family_cmd->add_option("spec", family_spec_text,
                           "path:N | cycle:N | complete:N | kb:R,T | grid:R,T | tree:@file")
        ->required();
    family_cmd->add_flag("--solve", family_solve, "also run the exact solver and compare");
    family_cmd->add_option("--emit", family_emit, "write the built graph to this edge-list file");
    family_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "structural lower and girth upper bound");
    std::string bounds_file;
    bounds_cmd->add_option("graph", bounds_file, "edge-list file")->required();
    bounds_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "build the 3-SAT hardness instance");
    std::string reduce_file, reduce_prefix;
    bool reduce_equiv = false;
    mixdim::EquivalenceConfig equiv_cfg;
    reduce_cmd->add_option("cnf", reduce_file, "DIMACS CNF file")->required();
    reduce_cmd->add_option("--out-prefix", reduce_prefix,
                           "output prefix (default: CNF path without extension)");
    reduce_cmd->add_flag("--equivalence", reduce_equiv,
                         "run the satisfiable <=> mdim=r check (within caps)");
    reduce_cmd->add_option("--exact-max-vars", equiv_cfg.exact_max_vars,
                           "exact-solve cap on variables (default 3)");
    reduce_cmd->add_option("--exact-max-clauses", equiv_cfg.exact_max_clauses,
                           "exact-solve cap on clauses (default 3)");
    reduce_cmd->add_option("--node-budget", equiv_cfg.solver.node_budget, "search node cap");
    reduce_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    // export-lp
    auto* lp_cmd = app.add_subcommand("export-lp", "write the 0/1 program as an LP file");
    std::string lp_file, lp_variant = "mdim", lp_out;
    lp_cmd->add_option("graph", lp_file, "edge-list file")->required();
    lp_cmd->add_option("--variant", lp_variant, "dim|edim|mdim (default mdim)");
    lp_cmd->add_option("-o,--output", lp_out, "output path (default: stdout)");
    lp_cmd->add_flag("--json", opts.as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    Timer timer;
    try {
        if (solve_cmd->parsed()) {
            mixdim::EdgeListFile file = mixdim::read_edge_list_file(solve_file);
            std::vector<mixdim::Variant> variants = variants_for(solve_variant);
            json results;
            json stats;
            std::string human;
            bool budget_hit = false;
            for (mixdim::Variant v : variants) {
                mixdim::SolveResult r = mixdim::solve(file.graph, v, solver_cfg);
                results[mixdim::variant_name(v)] = solve_result_json(r);
                stats[mixdim::variant_name(v)] = {{"nodes_explored", r.nodes_explored}};
                budget_hit |= !r.optimal();
                human += mixdim::variant_name(v) + " = " + std::to_string(r.value) + "  basis={";
                for (std::size_t i = 0; i < r.basis.size(); ++i) {
                    human += (i ? "," : "") + std::to_string(r.basis[i]);
                }
                human += "}  bounds=[" + std::to_string(r.lower_bound) + "," +
                         std::to_string(r.upper_bound) + "]" +
                         (r.optimal() ? "" : "  (budget exceeded, value unproven)") + "\n";
            }
            if (file.labeled) results["labels"] = file.labels;
            emit(opts, make_report(command_echo, mixdim::graph_digest(file.graph),
                                   std::move(results), timer, std::move(stats)),
                 human);
            return budget_hit ? kExitBudget : kExitOk;
        }

        if (verify_cmd->parsed()) {
            mixdim::EdgeListFile file = mixdim::read_edge_list_file(verify_file);
            std::vector<int> set = parse_vertex_set(verify_set, file);
            auto variant = mixdim::parse_variant(verify_variant);
            if (!variant) throw mixdim::ParseError("unknown variant \"" + verify_variant + "\"");
            mixdim::DistanceTable table = mixdim::all_pairs_distances(file.graph);
            mixdim::VerifyResult vr;
            try {
                vr = mixdim::verify_generator(table, set, *variant);
            } catch (const std::invalid_argument& e) {
                throw mixdim::ParseError(e.what());
            }
            json results;
            results["variant"] = mixdim::variant_name(*variant);
            results["set"] = set;
            std::string human;
            if (vr.valid()) {
                results["valid"] = true;
                human = "Valid\n";
            } else {
                results["valid"] = false;
                results["failing_pair"] = {mixdim::to_string(vr.failing->first, file.graph),
                                           mixdim::to_string(vr.failing->second, file.graph)};
                human = "FailingPair: " + mixdim::to_string(vr.failing->first, file.graph) +
                        " / " + mixdim::to_string(vr.failing->second, file.graph) + "\n";
            }
            if (file.labeled) results["labels"] = file.labels;
            emit(opts, make_report(command_echo, mixdim::graph_digest(file.graph),
                                   std::move(results), timer),
                 human);
            return kExitOk;
        }

        if (family_cmd->parsed()) {
            mixdim::FamilySpec spec = mixdim::parse_family_spec(family_spec_text);
            int value = mixdim::family_mdim(spec);
            mixdim::Graph g = mixdim::build_family(spec);
            json results;
            results["spec"] = mixdim::family_name(spec);
            results["n"] = g.vertex_count();
            results["m"] = g.edge_count();
            results["mdim"] = value;
            std::string human = mixdim::family_name(spec) + ": mdim = " + std::to_string(value) +
                                "  (n=" + std::to_string(g.vertex_count()) +
                                ", m=" + std::to_string(g.edge_count()) + ")\n";
            if (auto note = mixdim::family_note(spec)) {
                results["note"] = *note;
                human += "note: " + *note + "\n";
            }
            bool budget_hit = false;
            if (family_solve) {
                mixdim::SolveResult r = mixdim::solve(g, mixdim::Variant::mdim, {});
                results["solver"] = solve_result_json(r);
                results["solver_matches"] = r.optimal() && r.value == value;
                budget_hit = !r.optimal();
                human += "solver: " + std::to_string(r.value) +
                         (r.value == value ? " (matches)" : " (MISMATCH)") + "\n";
            }
            if (!family_emit.empty()) {
                write_file(family_emit, mixdim::write_edge_list(g));
                results["emitted"] = family_emit;
                human += "wrote " + family_emit + "\n";
            }
            emit(opts, make_report(command_echo, mixdim::graph_digest(g), std::move(results),
                                   timer),
                 human);
            return budget_hit ? kExitBudget : kExitOk;
        }

        if (bounds_cmd->parsed()) {
            mixdim::EdgeListFile file = mixdim::read_edge_list_file(bounds_file);
            int lb = mixdim::lower_bound(file.graph);
            mixdim::GirthBound ub = mixdim::upper_bound_girth(file.graph);
            auto g = mixdim::girth(file.graph);
            json results;
            results["lower"] = lb;
            results["upper"] = ub.value;
            results["girth"] = g ? json(*g) : json("acyclic");
            if (ub.witness_cycle) results["witness_cycle"] = *ub.witness_cycle;
            std::string human = "lower >= " + std::to_string(lb) + "\n";
            human += "girth = " + (g ? std::to_string(*g) : std::string("acyclic")) + "\n";
            human += "upper <= " + std::to_string(ub.value) +
                     (g ? " (n - girth + 3)" : " (acyclic fallback: n)") + "\n";
            emit(opts, make_report(command_echo, mixdim::graph_digest(file.graph),
                                   std::move(results), timer),
                 human);
            return kExitOk;
        }

        if (reduce_cmd->parsed()) {
            mixdim::CnfFormula f = mixdim::parse_cnf_file(reduce_file);
            mixdim::ReductionArtifact artifact = mixdim::build_reduction(f);
            std::string prefix = reduce_prefix;
            if (prefix.empty()) {
                prefix = reduce_file;
                auto dot = prefix.find_last_of('.');
                auto slash = prefix.find_last_of('/');
                if (dot != std::string::npos &&
                    (slash == std::string::npos || dot > slash)) {
                    prefix.resize(dot);
                }
            }
            std::string edges_path = prefix + ".edges";
            std::string sidecar_path = prefix + ".json";
            write_file(edges_path, mixdim::write_edge_list(artifact.graph));
            write_file(sidecar_path, mixdim::reduction_sidecar_json(artifact));

            json results;
            results["r"] = artifact.r;
            results["num_vars"] = artifact.num_vars;
            results["num_clauses"] = artifact.num_clauses;
            results["vertices"] = artifact.graph.vertex_count();
            results["edges"] = artifact.graph.edge_count();
            results["files"] = {{"edges", edges_path}, {"sidecar", sidecar_path}};
            std::string human = "r = " + std::to_string(artifact.r) + "  (n=" +
                                std::to_string(artifact.num_vars) + " vars, m=" +
                                std::to_string(artifact.num_clauses) + " clauses)\n";
            human += "graph: " + std::to_string(artifact.graph.vertex_count()) + " vertices, " +
                     std::to_string(artifact.graph.edge_count()) + " edges\n";
            human += "wrote " + edges_path + ", " + sidecar_path + "\n";

            bool budget_hit = false;
            if (reduce_equiv) {
                mixdim::EquivalenceReport rep = mixdim::verify_equivalence(f, equiv_cfg);
                json eq;
                eq["lower_bound_confirmed"] = rep.lower_bound_confirmed;
                if (rep.satisfiable) eq["satisfiable"] = *rep.satisfiable;
                if (rep.mdim) {
                    eq["mdim"] = *rep.mdim;
                    eq["mdim_optimal"] = rep.mdim_optimal;
                    budget_hit = !rep.mdim_optimal;
                }
                if (rep.equivalence_holds) eq["equivalence_holds"] = *rep.equivalence_holds;
                if (rep.constructive_ok) eq["constructive_ok"] = *rep.constructive_ok;
                results["equivalence"] = eq;
                human += "lower bound r confirmed: " +
                         std::string(rep.lower_bound_confirmed ? "yes" : "NO") + "\n";
                if (rep.satisfiable) {
                    human += "satisfiable: " + std::string(*rep.satisfiable ? "yes" : "no") + "\n";
                }
                if (rep.mdim) {
                    human += "mdim = " + std::to_string(*rep.mdim) +
                             (rep.mdim_optimal ? "" : " (budget exceeded, unproven)") + "\n";
                }
                if (rep.equivalence_holds) {
                    human += "satisfiable <=> mdim = r: " +
                             std::string(*rep.equivalence_holds ? "holds" : "VIOLATED") + "\n";
                }
                emit(opts, make_report(command_echo, mixdim::graph_digest(artifact.graph),
                                       std::move(results), timer),
                     human);
                return budget_hit ? kExitBudget : kExitOk;
            }
            emit(opts, make_report(command_echo, mixdim::graph_digest(artifact.graph),
                                   std::move(results), timer),
                 human);
            return kExitOk;
        }

        if (lp_cmd->parsed()) {
            mixdim::EdgeListFile file = mixdim::read_edge_list_file(lp_file);
            auto variant = mixdim::parse_variant(lp_variant);
            if (!variant) throw mixdim::ParseError("unknown variant \"" + lp_variant + "\"");
            std::string model = mixdim::export_ilp(file.graph, *variant);
            json results;
            results["variant"] = mixdim::variant_name(*variant);
            results["binaries"] = file.graph.vertex_count();
            if (!lp_out.empty()) {
                write_file(lp_out, model);
                results["file"] = lp_out;
                emit(opts, make_report(command_echo, mixdim::graph_digest(file.graph),
                                       std::move(results), timer),
                     "wrote " + lp_out + "\n");
            } else if (opts.as_json) {
                results["model"] = model;
                emit(opts, make_report(command_echo, mixdim::graph_digest(file.graph),
                                       std::move(results), timer),
                     "");
            } else {
                std::cout << model;
            }
            return kExitOk;
        }
    } catch (const mixdim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mixdim::CnfError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mixdim::FamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mixdim::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidGraph;
    } catch (const mixdim::ReductionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
