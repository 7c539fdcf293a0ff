#include "support/lp_check.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

int var_index(const std::string& tok) {
    if (tok.rfind("y_", 0) != 0) {
        throw std::runtime_error("lp parse: expected a y_<i> variable, got \"" + tok + "\"");
    }
    return std::stoi(tok.substr(2));
}

}  // namespace

LpModel parse_lp(const std::string& text) {
    LpModel model;
    enum class Section { preamble, objective, constraints, binary, end };
    Section section = Section::preamble;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '\\') continue;
        if (line == "Minimize") {
            section = Section::objective;
            continue;
        }
        if (line == "Subject To") {
            section = Section::constraints;
            continue;
        }
        if (line == "Binary") {
            section = Section::binary;
            continue;
        }
        if (line == "End") {
            section = Section::end;
            continue;
        }

        std::istringstream ls(line);
        if (section == Section::binary) {
            std::string tok;
            ls >> tok;
            int idx = var_index(tok);
            if (idx + 1 > model.num_vars) model.num_vars = idx + 1;
            continue;
        }
        if (section == Section::constraints) {
            LpConstraint c;
            std::string tok;
            ls >> tok;  // "p_j_l:"
            if (tok.empty() || tok.back() != ':') {
                throw std::runtime_error("lp parse: expected a constraint label, got \"" + tok +
                                         "\"");
            }
            c.name = tok.substr(0, tok.size() - 1);
            int coeff = 1;
            bool have_coeff = false;
            while (ls >> tok) {
                if (tok == "+") continue;
                if (tok == ">=") {
                    ls >> c.rhs;
                    break;
                }
                if (tok.rfind("y_", 0) == 0) {
                    c.terms.emplace_back(have_coeff ? coeff : 1, var_index(tok));
                    have_coeff = false;
                } else {
                    coeff = std::stoi(tok);
                    have_coeff = true;
                }
            }
            model.constraints.push_back(std::move(c));
            continue;
        }
        // Objective terms are all-ones over the binaries; nothing to record.
    }
    if (model.num_vars == 0) throw std::runtime_error("lp parse: no Binary section");
    return model;
}

int lp_brute_force_optimum(const LpModel& model) {
    if (model.num_vars > 20) throw std::runtime_error("lp brute force: too many variables");
    int best = -1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << model.num_vars); ++bits) {
        bool feasible = true;
        for (const LpConstraint& c : model.constraints) {
            int lhs = 0;
            for (auto [coeff, v] : c.terms) {
                if ((bits >> v) & 1) lhs += coeff;
            }
            if (lhs < c.rhs) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        int objective = std::popcount(bits);
        if (best < 0 || objective < best) best = objective;
    }
    return best;
}

}  // namespace oracle
