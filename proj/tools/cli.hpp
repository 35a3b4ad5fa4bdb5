#pragma once

// depthlab command-line front end. run_cli() is the whole program; main()
// only forwards to it, so tests can drive commands in-process.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "depthlab/depthlab.hpp"
#include "depthlab/json_io.hpp"

namespace depthlab::cli {

enum exit_code : int { ok = 0, verification_failed = 1, bad_input = 2, too_large = 3 };

namespace detail {

inline std::string aligned(const std::vector<std::vector<std::string>>& cells)
{
    std::vector<std::size_t> width;
    for (const auto& row : cells) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t j = 0; j < row.size(); ++j)
            width[j] = std::max(width[j], row[j].size());
    }
    std::ostringstream out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j == 0)
                line += row[j] + std::string(width[0] - row[j].size(), ' ');
            else
                line += "  " + std::string(width[j] - row[j].size(), ' ') + row[j];
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
    }
    return out.str();
}

inline std::string matrix_text(const NonNegIntMatrix& m)
{
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        cells.emplace_back();
        for (std::size_t j = 0; j < m.cols(); ++j)
            cells.back().push_back(m(i, j).str());
    }
    // aligned() left-justifies the first column; pad it on the left instead
    std::size_t w = 0;
    for (const auto& row : cells)
        w = std::max(w, row[0].size());
    for (auto& row : cells)
        row[0] = std::string(w - row[0].size(), ' ') + row[0];
    return aligned(cells);
}

inline std::string table_text(const CharacterTable& t)
{
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"rep"});
    cells.push_back({"size"});
    for (std::size_t c = 0; c < t.size(); ++c) {
        cells[0].push_back(t.classes().representatives[c].to_cycles());
        cells[1].push_back(std::to_string(t.classes().sizes[c]));
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
        cells.push_back({"chi" + std::to_string(i + 1)});
        for (const auto& v : t.character(i))
            cells.back().push_back(v.to_string());
    }
    return aligned(cells);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Labels {
    std::vector<std::string> rows; // simples of the subalgebra
    std::vector<std::string> cols; // simples of the algebra
};

inline std::string coordinate_text(const DepthTest& t, const Labels& labels)
{
    const auto& c = *t.failure;
    const auto& col = t.depth % 2 == 1 ? labels.rows : labels.cols;
    return "(" + labels.rows[c.row] + ", " + col[c.col] + "): " + t.lhs(c.row, c.col).str() + " vs 0";
}

inline void print_depth(std::ostream& out, const NonNegIntMatrix& m, const DepthReport& report, const Labels& labels)
{
    out << "S = M M^t:\n" << matrix_text(s_matrix(m)) << '\n';
    for (unsigned d = 2; d <= report.cap; ++d) {
        DepthTest t = is_depth_n(m, d);
        if (t.holds) {
            out << "depth " << d << ": holds, " << t.inequality << " with q = " << t.multiplier->str() << '\n';
            break;
        }
        out << "depth " << d << ": fails, " << t.inequality << " breaks at " << coordinate_text(t, labels) << '\n';
    }
    if (report.minimal_depth)
        out << "minimal depth: " << *report.minimal_depth << '\n';
    else
        out << "minimal depth: none up to " << report.cap << '\n';
}

inline std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot read \"" + path + "\"");
    buf << in.rdbuf();
    return buf.str();
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Depth of subgroups and ring extensions via inclusion matrices", "depthlab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    bool as_json = false;
    bool matrix_only = false;
    unsigned cap = default_depth_cap;
    std::size_t psi_index = 0;
    std::string group, sub, mid, path;
    std::vector<std::string> chain;

    auto* table = app.add_subcommand("table", "Print the character table of a group");
    table->add_option("group", group, "Group spec")->required();
    table->add_flag("--json", as_json, "Emit JSON");

    auto* depth = app.add_subcommand("depth", "Inclusion matrix and minimal depth of H in G");
    depth->add_option("group", group, "Parent group spec")->required();
    depth->add_option("subgroup", sub, "Subgroup spec")->required();
    depth->add_option("--cap", cap, "Largest depth to try")->check(CLI::Range(2u, 200u));
    depth->add_flag("--json", as_json, "Emit JSON");
    depth->add_flag("--matrix-only", matrix_only, "Only print the inclusion matrix");

    auto* tower = app.add_subcommand("tower", "Depth-three test for a tower G >= N >= H");
    tower->add_option("group", group, "Top group spec")->required();
    tower->add_option("middle", mid, "Middle subgroup spec")->required();
    tower->add_option("subgroup", sub, "Bottom subgroup spec")->required();
    tower->add_flag("--json", as_json, "Emit JSON");

    auto* matrix_depth = app.add_subcommand("matrix-depth", "Minimal depth of a matrix read from a JSON file");
    matrix_depth->add_option("file", path, "JSON file with {rows, cols, entries}, or - for stdin")->required();
    matrix_depth->add_option("--cap", cap, "Largest depth to try")->check(CLI::Range(2u, 200u));
    matrix_depth->add_flag("--json", as_json, "Emit JSON");

    auto* bratteli = app.add_subcommand("bratteli", "Bratteli diagram of H in G as DOT");
    bratteli->add_option("specs", chain, "G H, or --matrix FILE")->expected(0, 2);
    bratteli->add_option("--matrix", path, "Read the inclusion matrix from a JSON file instead");

    auto* verify = app.add_subcommand("verify", "Run one of the verification checks");
    verify->require_subcommand(1);
    verify->add_flag("--json", as_json, "Emit JSON");
    auto* v_frobenius = verify->add_subcommand("frobenius", "Frobenius complement test and S formula");
    auto* v_mackey = verify->add_subcommand("mackey", "Mackey decomposition of Res_N Ind_H^G");
    auto* v_d2 = verify->add_subcommand("d2qb", "Depth-two quasi-bases for N in G");
    auto* v_d3 = verify->add_subcommand("d3qb", "Depth-three quasi-bases built from depth-two data");
    auto* v_tower = verify->add_subcommand("tower-equiv", "Matrix and normal-core verdicts agree");
    for (auto* v : {v_frobenius, v_mackey, v_d2, v_d3, v_tower})
        v->add_flag("--json", as_json, "Emit JSON");
    v_frobenius->add_option("group", group)->required();
    v_frobenius->add_option("subgroup", sub)->required();
    v_mackey->add_option("group", group)->required();
    v_mackey->add_option("middle", mid, "The subgroup N restricted to")->required();
    v_mackey->add_option("subgroup", sub, "The subgroup H induced from")->required();
    v_mackey->add_option("--psi", psi_index, "Check only this irreducible of H (1-based)")->check(CLI::PositiveNumber);
    v_d2->add_option("group", group)->required();
    v_d2->add_option("subgroup", sub)->required();
    v_d3->add_option("group", group)->required();
    v_d3->add_option("subgroup", sub)->required();
    v_tower->add_option("group", group)->required();
    v_tower->add_option("middle", mid)->required();
    v_tower->add_option("subgroup", sub)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*table) {
            const CharacterTable t = character_table(parse_group_spec(group).group());
            if (as_json)
                out << table_to_json(t).dump(2) << '\n';
            else
                out << detail::table_text(t);
            return ok;
        }

        if (*depth) {
            const auto groups = resolve_chain({group, sub});
            const InclusionMatrix m = inclusion_matrix(groups[0], groups[1]);
            const DepthReport report = minimal_depth(m.entries, cap);
            if (as_json) {
                json j = matrix_only ? inclusion_to_json(m)
                                     : json{{"inclusion_matrix", inclusion_to_json(m)},
                                            {"s_matrix", matrix_to_json(s_matrix(m.entries))},
                                            {"report", depth_report_to_json(report)}};
                out << j.dump(2) << '\n';
                return ok;
            }
            out << "M (rows Irr(H), columns Irr(G)):\n" << m.to_text();
            if (matrix_only)
                return ok;
            out << '\n';
            detail::print_depth(out, m.entries, report, {m.row_labels, m.col_labels});
            return ok;
        }

        if (*matrix_depth) {
            const NonNegIntMatrix m = matrix_from_json_text(detail::read_input(path));
            const DepthReport report = minimal_depth(m, cap);
            if (as_json) {
                out << json{{"matrix", matrix_to_json(m)}, {"report", depth_report_to_json(report)}}.dump(2) << '\n';
                return ok;
            }
            out << "M:\n" << detail::matrix_text(m) << '\n';
            detail::print_depth(out, m, report,
                                {character_labels("b", m.rows()), character_labels("a", m.cols())});
            return ok;
        }

        if (*bratteli) {
            if (!path.empty()) {
                if (!chain.empty())
                    throw input_error("give either group specs or --matrix, not both");
                const NonNegIntMatrix m = matrix_from_json_text(detail::read_input(path));
                out << bratteli_dot(m, character_labels("b", m.rows()), character_labels("a", m.cols()));
                return ok;
            }
            if (chain.size() != 2)
                throw input_error("bratteli needs a group and a subgroup, or --matrix FILE");
            const auto groups = resolve_chain(chain);
            const InclusionMatrix m = inclusion_matrix(groups[0], groups[1]);
            out << bratteli_dot(m.entries, m.row_labels, m.col_labels);
            return ok;
        }

        if (*tower || *v_tower) {
            const auto groups = resolve_chain({group, mid, sub});
            const TowerReport r = tower_core_equivalence(character_table(groups[0]), character_table(groups[1]),
                                                         character_table(groups[2]));
            if (as_json) {
                json j{{"check", "tower-equiv"},
                       {"passed", r.agree},
                       {"matrix_verdict", r.matrix_verdict},
                       {"core_verdict", r.core_verdict},
                       {"agree", r.agree}};
                j["multiplier"] = r.multiplier ? bigint_to_json(*r.multiplier) : json(nullptr);
                j["failure"] = r.failure ? coordinate_to_json(*r.failure) : json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                out << "matrix verdict (N M M^t M <= q N M): " << detail::yes_no(r.matrix_verdict);
                if (r.multiplier)
                    out << ", q = " << r.multiplier->str();
                out << '\n';
                out << "core verdict (H in core_G(N)): " << detail::yes_no(r.core_verdict) << '\n';
                out << "agree: " << detail::yes_no(r.agree) << '\n';
                if (*v_tower)
                    out << "tower-equiv: " << (r.agree ? "pass" : "fail") << '\n';
                else
                    out << "d3: " << detail::yes_no(r.matrix_verdict) << '\n';
            }
            return r.agree ? ok : verification_failed;
        }

        if (*v_frobenius) {
            const auto groups = resolve_chain({group, sub});
            const FrobeniusPairReport r = verify_frobenius_pair(character_table(groups[0]), character_table(groups[1]));
            const bool passed = r.is_frobenius && r.s_formula_ok;
            if (as_json) {
                json j{{"check", "frobenius"}, {"passed", passed}, {"is_frobenius", r.is_frobenius},
                       {"double_cosets", r.double_coset_count}, {"s_formula", r.s_formula_ok}};
                if (r.kernel) {
                    json gens = json::array();
                    for (const auto& g : r.kernel->generators())
                        gens.push_back(g.to_cycles());
                    j["kernel"] = json{{"order", bigint_to_json(r.kernel->order())}, {"generators", gens}};
                } else {
                    j["kernel"] = nullptr;
                }
                j["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
                out << j.dump(2) << '\n';
            } else {
                out << "frobenius: " << (passed ? "pass" : "fail") << '\n';
                if (r.kernel) {
                    out << "kernel: order " << r.kernel->order().str() << ", generated by";
                    for (const auto& g : r.kernel->generators())
                        out << ' ' << g.to_cycles();
                    out << '\n';
                    out << "double cosets: " << r.double_coset_count << '\n';
                    out << "S = (n-1) deg(psi) deg(chi) + [psi = chi]: " << detail::yes_no(r.s_formula_ok) << '\n';
                } else {
                    out << "reason: " << r.reason << '\n';
                }
            }
            return passed ? ok : verification_failed;
        }

        if (*v_mackey) {
            const auto groups = resolve_chain({group, mid});
            GroupSpec h = pad_to_degree(parse_group_spec(sub), groups[0].degree());
            const PermGroup hg = h.group();
            require_subgroup(groups[0], hg, ("\"" + sub + "\"").c_str());
            const CharacterTable tg = character_table(groups[0]);
            const CharacterTable tn = character_table(groups[1]);
            const CharacterTable th = character_table(hg);
            if (psi_index > th.size())
                throw input_error("--psi " + std::to_string(psi_index) + " is out of range; H has " +
                                  std::to_string(th.size()) + " irreducibles");
            bool passed = true;
            json rows = json::array();
            for (std::size_t p = 0; p < th.size(); ++p) {
                if (psi_index != 0 && p + 1 != psi_index)
                    continue;
                const MackeyReport r = mackey_check(tg, tn, th, p);
                passed = passed && r.holds;
                if (as_json)
                    rows.push_back(json{{"psi", p + 1}, {"holds", r.holds}, {"double_cosets", r.double_coset_count}});
                else
                    out << "psi" << p + 1 << ": " << (r.holds ? "holds" : "fails") << " over "
                        << r.double_coset_count << " double cosets\n";
            }
            if (as_json)
                out << json{{"check", "mackey"}, {"passed", passed}, {"characters", rows}}.dump(2) << '\n';
            else
                out << "mackey: " << (passed ? "pass" : "fail") << '\n';
            return passed ? ok : verification_failed;
        }

        if (*v_d2 || *v_d3) {
            const auto groups = resolve_chain({group, sub});
            const char* name = *v_d2 ? "d2qb" : "d3qb";
            const VerificationResult r =
                *v_d2 ? verify_d2_quasibases(groups[0], groups[1]) : verify_d3_from_d2(groups[0], groups[1]);
            if (as_json) {
                out << verification_to_json(name, r).dump(2) << '\n';
            } else {
                out << name << ": " << (r.passed ? "pass" : "fail") << '\n';
                if (!r.passed) {
                    out << "failed: " << r.failed_check << '\n';
                    if (r.counterexample)
                        out << "counterexample: " << r.counterexample->first.to_cycles() << ", "
                            << r.counterexample->second.to_cycles() << '\n';
                }
            }
            return r.passed ? ok : verification_failed;
        }
    } catch (const resource_error& e) {
        err << "depthlab: " << e.what() << '\n';
        return too_large;
    } catch (const input_error& e) {
        err << "depthlab: " << e.what() << '\n';
        return bad_input;
    } catch (const std::bad_alloc&) {
        err << "depthlab: out of memory\n";
        return too_large;
    } catch (const std::exception& e) {
        err << "depthlab: internal error: " << e.what() << '\n';
        return verification_failed;
    }
    err << "depthlab: no command given\n";
    return bad_input;
}

} // namespace depthlab::cli
