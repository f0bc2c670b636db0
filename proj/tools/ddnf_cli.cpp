#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddnf/bounds.hpp"
#include "ddnf/encoder.hpp"
#include "ddnf/external.hpp"
#include "ddnf/oracle.hpp"
#include "ddnf/search.hpp"
#include "ddnf/solver.hpp"

namespace {

using namespace ddnf;
using nlohmann::json;

GroupSpec group_from_name(const std::string& name, int n) {
    auto kind = parse_group_kind(name);
    if (!kind) throw CLI::ValidationError("--group", "unknown group: " + name);
    return GroupSpec{*kind, n};
}

void add_solver_options(CLI::App* cmd, SolveConfig& config) {
    cmd->add_option("--timeout", config.timeout_seconds,
                    "per-instance time limit in seconds, 0 = unlimited")
        ->default_val(60.0);
    cmd->add_option("--solver", config.external_command,
                    "external DIMACS solver command; {cnf} marks the instance path");
    cmd->add_flag_callback(
        "--lowest-index-order",
        [&config] { config.order = DecisionOrder::LowestIndex; },
        "branch on the lowest-numbered unassigned variable instead of "
        "conflict activity");
    cmd->add_option("--seed", config.seed, "embedded solver seed (deterministic anyway)");
}

void print_search_result(const SearchResult& r, bool csv) {
    if (csv) {
        std::cout << "n,u,group,k_found,k_density_bound,proven_optimal,matched_bound\n"
                  << r.n << ',' << r.u << ',' << r.group.name() << ',' << r.k_found
                  << ',' << r.k_density_bound << ',' << (r.proven_optimal ? 1 : 0)
                  << ',' << (r.matched_bound ? 1 : 0) << '\n';
        return;
    }
    std::cout << "n=" << r.n << " u=" << r.u << " group=" << r.group.name()
              << "  density bound k <= " << r.k_density_bound << '\n';
    for (auto it = r.status_per_k.rbegin(); it != r.status_per_k.rend(); ++it)
        std::cout << "  k=" << it->first << ": " << solve_status_name(it->second)
                  << "  (" << r.runtime_per_k.at(it->first) << " s)\n";
    std::cout << "k_found = " << r.k_found
              << (r.proven_optimal ? " (optimal)" : " (not proven optimal)")
              << (r.matched_bound ? ", matches density bound" : "") << '\n';
    if (r.witness) std::cout << dnf_to_string(*r.witness);
}

int run(int argc, char** argv) {
    CLI::App app{"distinct DNF tautology search toolkit"};
    app.require_subcommand(1);

    // ---- bound -----------------------------------------------------------
    int n = 0, u = 0, k = 0;
    auto* bound_cmd = app.add_subcommand("bound", "density upper bound on k for (n,u)");
    bound_cmd->add_option("--n", n)->required();
    bound_cmd->add_option("--u", u)->required();
    bound_cmd->callback([&] {
        BoundResult b = density_bound(n, u);
        std::cout << "k_max_bound=" << b.k_max_bound << '\n';
        std::cout << "k,feasible\n";
        for (std::size_t i = 0; i < b.per_k_feasible.size(); ++i)
            std::cout << i << ',' << (b.per_k_feasible[i] ? 1 : 0) << '\n';
    });

    // ---- oracle ----------------------------------------------------------
    std::string group_name = "none";
    bool no_prune = false, best_effort = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force existence check (tiny n)");
    oracle_cmd->add_option("--n", n)->required();
    oracle_cmd->add_option("--u", u)->required();
    oracle_cmd->add_option("--k", k)->required();
    oracle_cmd->add_option("--group", group_name);
    oracle_cmd->add_flag("--no-prune", no_prune);
    oracle_cmd->add_flag("--best-effort", best_effort);
    oracle_cmd->callback([&] {
        OracleOptions options;
        options.prune = !no_prune;
        options.best_effort = best_effort;
        OracleResult r = exists_bruteforce(n, u, k, group_from_name(group_name, n), options);
        json j;
        j["exists"] = r.exists;
        j["nodes_explored"] = r.nodes_explored;
        if (r.witness) {
            json cubes = json::array();
            for (const Cube& c : r.witness->cubes()) cubes.push_back(c.literals());
            j["witness"] = cubes;
        }
        std::cout << j.dump(2) << '\n';
    });

    // ---- encode ----------------------------------------------------------
    std::string out_path;
    bool sym_break = true, forbid_subsumed = false;
    auto* encode_cmd = app.add_subcommand("encode", "write the SAT instance as DIMACS CNF");
    encode_cmd->add_option("--n", n)->required();
    encode_cmd->add_option("--u", u)->required();
    encode_cmd->add_option("--k", k)->required();
    encode_cmd->add_option("--group", group_name);
    encode_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    encode_cmd->add_flag("!--no-sym-break", sym_break, "disable symmetry breaking");
    encode_cmd->add_flag("--forbid-subsumed", forbid_subsumed);
    encode_cmd->callback([&] {
        GroupSpec group = group_from_name(group_name, n);
        EncodeOptions options;
        options.symmetry_breaking = sym_break && group.is_trivial();
        options.forbid_subsumed = forbid_subsumed;
        EncodedInstance inst = build_instance(n, u, k, group, options);
        if (inst.trivially_unsat) {
            std::cerr << "instance is trivially unsatisfiable "
                         "(some assignment is covered by no cube)\n";
            throw CLI::RuntimeError(20);
        }
        if (out_path.empty()) {
            std::cout << inst.to_dimacs();
        } else {
            std::ofstream out(out_path, std::ios::binary);
            out << inst.to_dimacs();
        }
    });

    // ---- solve -----------------------------------------------------------
    std::string cnf_path;
    SolveConfig solve_config;
    auto* solve_cmd = app.add_subcommand("solve", "run the embedded solver on a DIMACS file");
    solve_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
    solve_cmd->add_option("--timeout", solve_config.timeout_seconds)->default_val(60.0);
    solve_cmd->add_flag_callback(
        "--lowest-index-order",
        [&solve_config] { solve_config.order = DecisionOrder::LowestIndex; });
    solve_cmd->callback([&] {
        CnfFormula f = read_dimacs_file(cnf_path);
        SolveBudget budget;
        budget.time_limit_seconds = solve_config.timeout_seconds;
        budget.order = solve_config.order;
        SolveOutcome outcome = solve_embedded(f, budget);
        std::cout << "c decisions " << outcome.stats.decisions
                  << " propagations " << outcome.stats.propagations
                  << " conflicts " << outcome.stats.conflicts << '\n';
        switch (outcome.status) {
            case SolveStatus::Satisfiable: {
                std::cout << "s SATISFIABLE\n";
                std::cout << 'v';
                for (int v = 1; v <= f.num_vars; ++v)
                    std::cout << ' ' << (outcome.model[v] ? v : -v);
                std::cout << " 0\n";
                throw CLI::RuntimeError(10);
            }
            case SolveStatus::Unsatisfiable:
                std::cout << "s UNSATISFIABLE\n";
                throw CLI::RuntimeError(20);
            default:
                std::cout << "s UNKNOWN\n";
                throw CLI::RuntimeError(0);
        }
    });

    // ---- search ------------------------------------------------------------
    SolveConfig search_config;
    std::string store_path;
    bool force = false, csv = false;
    auto* search_cmd = app.add_subcommand("search", "maximal k for (n,u,group)");
    search_cmd->add_option("--n", n)->required();
    search_cmd->add_option("--u", u)->required();
    search_cmd->add_option("--group", group_name);
    search_cmd->add_option("--store", store_path, "append-only JSON result store");
    search_cmd->add_flag("--force", force, "re-run even if the store has this query");
    search_cmd->add_flag("--csv", csv);
    add_solver_options(search_cmd, search_config);
    search_cmd->callback([&] {
        GroupSpec group = group_from_name(group_name, n);
        std::string options_key = search_config.options_key();
        if (!store_path.empty() && !force) {
            ResultStore store(store_path);
            if (auto cached = store.lookup(n, u, group, options_key)) {
                std::cout << "(from result store)\n";
                print_search_result(*cached, csv);
                return;
            }
        }
        SearchResult r = max_k(n, u, group, search_config);
        if (!store_path.empty()) ResultStore(store_path).record(r, options_key);
        print_search_result(r, csv);
    });

    // ---- exact ---------------------------------------------------------------
    SolveConfig exact_config;
    auto* exact_cmd = app.add_subcommand("exact", "single instance with u = k");
    exact_cmd->add_option("--n", n)->required();
    exact_cmd->add_option("--k", k)->required();
    exact_cmd->add_option("--group", group_name);
    add_solver_options(exact_cmd, exact_config);
    exact_cmd->callback([&] {
        ExactResult r = exact_k(n, k, group_from_name(group_name, n), exact_config);
        std::cout << "n=" << n << " k=u=" << k << ": " << solve_status_name(r.status)
                  << " (" << r.wall_seconds << " s)\n";
        if (r.witness) std::cout << dnf_to_string(*r.witness);
    });

    // ---- table -----------------------------------------------------------------
    SolveConfig table_config;
    std::string which = "plain";
    int n_max = 6;
    bool table_csv = false;
    auto* table_cmd = app.add_subcommand("table", "reproduce a result grid with diff report");
    table_cmd->add_option("--which", which,
                          "plain | cyclic_dihedral | alternating_symmetric");
    table_cmd->add_option("--n-max", n_max);
    table_cmd->add_flag("--csv", table_csv);
    add_solver_options(table_cmd, table_config);
    table_cmd->callback([&] {
        auto kind = parse_table_kind(which);
        if (!kind) throw CLI::ValidationError("--which", "unknown table: " + which);
        TableReport report = reproduce_table(*kind, n_max, table_config);
        if (table_csv) {
            std::cout << report.render_csv();
        } else {
            std::cout << report.render_grid() << '\n';
            for (const std::string& line : report.diff_lines) std::cout << line << '\n';
            std::cout << (report.all_match ? "all completed entries agree"
                                           : "DISAGREEMENTS FOUND") << '\n';
        }
        if (!report.all_match) throw CLI::RuntimeError(1);
    });

    // ---- verify --------------------------------------------------------------
    std::string dnf_path;
    auto* verify_cmd = app.add_subcommand("verify", "check a DNF file against (k,u,group)");
    verify_cmd->add_option("--dnf", dnf_path)->required();
    verify_cmd->add_option("--k", k)->required();
    verify_cmd->add_option("--u", u)->required();
    verify_cmd->add_option("--group", group_name);
    verify_cmd->callback([&] {
        Dnf d = read_dnf_file(dnf_path);
        VerificationReport report =
            verify(d, k, u, group_from_name(group_name, d.n()));
        json j;
        j["is_tautology"] = report.is_tautology;
        j["distinct_supports"] = report.distinct_supports;
        j["min_length"] = report.min_length;
        j["max_length"] = report.max_length;
        j["length_window_ok"] = report.length_window_ok;
        if (report.invariant_under_group)
            j["invariant_under_group"] = *report.invariant_under_group;
        if (report.first_uncovered_assignment) {
            std::vector<int> bits;
            for (int i = 1; i <= d.n(); ++i)
                bits.push_back(report.first_uncovered_assignment->value(i) ? i : -i);
            j["first_uncovered_assignment"] = bits;
        }
        if (report.first_duplicate_support) {
            std::vector<int> vars;
            for (int i = 1; i <= d.n(); ++i)
                if ((*report.first_duplicate_support >> (i - 1)) & 1u) vars.push_back(i);
            j["first_duplicate_support"] = vars;
        }
        j["ok"] = report.all_ok();
        std::cout << j.dump(2) << '\n';
        if (!report.all_ok()) throw CLI::RuntimeError(1);
    });

    CLI11_PARSE(app, argc, argv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
