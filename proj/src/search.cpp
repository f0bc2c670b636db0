#include "ddnf/search.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ddnf/external.hpp"

namespace ddnf {

using nlohmann::json;

std::string SolveConfig::options_key() const {
    std::ostringstream key;
    key << "sb=" << (symmetry_breaking ? 1 : 0)
        << ";order=" << (order == DecisionOrder::Activity ? "activity" : "index")
        << ";seed=" << seed
        << ";solver=" << (external_command.empty() ? "embedded" : external_command);
    return key.str();
}

namespace {

SolveOutcome dispatch_solve(const CnfFormula& f, const SolveConfig& config) {
    SolveBudget budget;
    budget.time_limit_seconds = config.timeout_seconds;
    budget.order = config.order;
    budget.seed = config.seed;
    if (config.external_command.empty()) return solve_embedded(f, budget);
    return solve_external(f, config.external_command, budget);
}

struct InstanceOutcome {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<Dnf> witness;
    double wall_seconds = 0.0;
};

InstanceOutcome solve_instance(int n, int u, int k, const GroupSpec& group,
                               const SolveConfig& config) {
    EncodeOptions options;
    options.symmetry_breaking = config.symmetry_breaking && group.is_trivial();
    EncodedInstance inst = build_instance(n, u, k, group, options);

    InstanceOutcome outcome;
    if (inst.trivially_unsat) {
        outcome.status = SolveStatus::Unsatisfiable;
        return outcome;
    }
    SolveOutcome solved = dispatch_solve(inst.cnf, config);
    outcome.status = solved.status;
    outcome.wall_seconds = solved.stats.wall_seconds;
    if (solved.status == SolveStatus::Satisfiable)
        outcome.witness = decode_and_verify(solved.model, inst.vars, n, u, k, group);
    return outcome;
}

} // namespace

Dnf decode_and_verify(const std::vector<bool>& model, const VarMap& vm,
                      int n, int u, int k, const GroupSpec& group) {
    Dnf d = decode_model(model, vm, n);
    VerificationReport report = verify(d, k, u, group);
    if (!report.all_ok()) {
        std::ostringstream msg;
        msg << "decoded model fails verification for n=" << n << " u=" << u
            << " k=" << k << " group=" << group.name()
            << " (tautology=" << report.is_tautology
            << " distinct=" << report.distinct_supports
            << " window=" << report.length_window_ok;
        if (report.invariant_under_group)
            msg << " invariant=" << *report.invariant_under_group;
        msg << ")\n" << dnf_to_string(d);
        throw std::logic_error(msg.str());
    }
    return d;
}

SearchResult max_k(int n, int u, const GroupSpec& group, const SolveConfig& config) {
    if (u < 1 || u > n) throw std::invalid_argument("max_k requires 1 <= u <= n");
    SearchResult result;
    result.n = n;
    result.u = u;
    result.group = group;
    result.k_density_bound = density_bound(n, u).k_max_bound;

    result.k_found = 0;
    int lowest_unsat = result.k_density_bound + 1;
    for (int k = result.k_density_bound; k >= 1; --k) {
        InstanceOutcome outcome = solve_instance(n, u, k, group, config);
        result.status_per_k[k] = outcome.status;
        result.runtime_per_k[k] = outcome.wall_seconds;
        if (outcome.status == SolveStatus::Satisfiable) {
            result.k_found = k;
            result.witness = std::move(outcome.witness);
            break;
        }
        if (outcome.status == SolveStatus::Unsatisfiable) lowest_unsat = k;
    }
    // UNSAT at k rules out every larger k as well, so a timeout above an
    // eventual UNSAT does not hurt optimality
    bool optimal = true;
    for (const auto& [k, status] : result.status_per_k)
        if (status != SolveStatus::Satisfiable && status != SolveStatus::Unsatisfiable &&
            k < lowest_unsat)
            optimal = false;
    if (result.k_found == 0 && !optimal) result.k_found = -1;
    result.proven_optimal = optimal && result.k_found >= 0;
    result.matched_bound = result.k_found == result.k_density_bound;
    return result;
}

ExactResult exact_k(int n, int k, const GroupSpec& group, const SolveConfig& config) {
    if (k < 1 || k > n) throw std::invalid_argument("exact_k requires 1 <= k <= n");
    InstanceOutcome outcome = solve_instance(n, k, k, group, config);
    ExactResult result;
    result.status = outcome.status;
    result.witness = std::move(outcome.witness);
    result.wall_seconds = outcome.wall_seconds;
    return result;
}

// ---- reference grids ---------------------------------------------------

namespace {

std::vector<ReferenceEntry> make_plain_reference() {
    // column n, rows u = 2..n; flags: below_bound, unconfirmed
    struct Row { int n; std::vector<int> k_by_u; };
    static const Row rows[] = {
        {2, {1}},
        {3, {1, 1}},
        {4, {2, 2, 2}},
        {5, {2, 2, 3, 3}},
        {6, {2, 3, 3, 4, 4}},
        {7, {2, 3, 4, 4, 4, 4}},
        {8, {2, 3, 4, 5, 5, 5, 5}},
        {9, {2, 3, 4, 5, 5, 6, 6, 6}},
        {10, {2, 3, 4, 5, 6, 6, 6, 6, 6}},
    };
    std::vector<ReferenceEntry> entries;
    for (const Row& row : rows)
        for (std::size_t i = 0; i < row.k_by_u.size(); ++i) {
            ReferenceEntry e;
            e.n = row.n;
            e.u = static_cast<int>(i) + 2;
            e.k = row.k_by_u[i];
            if ((e.n == 5 && e.u == 3) || (e.n == 9 && e.u == 6) ||
                (e.n == 10 && e.u >= 8))
                e.below_bound = true;
            if (e.n == 10 && e.u >= 9) e.unconfirmed = true;
            entries.push_back(e);
        }
    return entries;
}

struct GridRow { int n; std::vector<int> k_by_u; };

std::vector<ReferenceEntry> entries_from_rows(const std::vector<GridRow>& rows) {
    std::vector<ReferenceEntry> entries;
    for (const GridRow& row : rows)
        for (std::size_t i = 0; i < row.k_by_u.size(); ++i) {
            ReferenceEntry e;
            e.n = row.n;
            e.u = static_cast<int>(i) + 2;
            e.k = row.k_by_u[i];
            e.below_bound = e.k < density_bound(e.n, e.u).k_max_bound;
            entries.push_back(e);
        }
    return entries;
}

// Both rotation grids were recomputed here: every SAT value carries an
// independently re-verified witness and every cell with n <= 6 was also
// confirmed by the brute-force search. The cyclic values at (8,6), (8,7),
// (8,8) are settled by the dihedral witnesses (a D_n-invariant DNF is
// C_n-invariant), sidestepping the slow cyclic UNSAT attempts there.
std::vector<ReferenceEntry> make_cyclic_reference() {
    static const std::vector<GridRow> rows = {
        {2, {1}},
        {3, {1, 1}},
        {4, {2, 2, 2}},
        {5, {2, 2, 3, 3}},
        {6, {2, 3, 3, 3, 4}},
        {7, {2, 3, 4, 4, 4, 4}},
        {8, {2, 3, 4, 5, 5, 5, 5}},
    };
    return entries_from_rows(rows);
}

// Differs from the cyclic grid at (6,6) = 3 and (8,5) = 4: the extra
// reflection constraint genuinely lowers the achievable k there.
std::vector<ReferenceEntry> make_dihedral_reference() {
    static const std::vector<GridRow> rows = {
        {2, {1}},
        {3, {1, 1}},
        {4, {2, 2, 2}},
        {5, {2, 2, 3, 3}},
        {6, {2, 3, 3, 3, 3}},
        {7, {2, 3, 4, 4, 4, 4}},
        {8, {2, 3, 4, 4, 5, 5, 5}},
    };
    return entries_from_rows(rows);
}

std::vector<ReferenceEntry> make_full_window_reference() {
    static const int k_by_n[] = {0, 1, 1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 9, 9};
    std::vector<ReferenceEntry> entries;
    for (int n = 1; n <= 14; ++n) {
        ReferenceEntry e;
        e.n = n;
        e.u = n;
        e.k = k_by_n[n - 1];
        e.below_bound = (n == 10 || n == 14); // one below the density bound
        e.unconfirmed = (n == 10 || n == 14);
        entries.push_back(e);
    }
    return entries;
}

std::vector<ReferenceEntry> make_exact_length_reference() {
    static const int k_by_n[] = {0, 0, 0, 2, 2, 3, 4, 5, 5, 6, 7, 8, 8, 9};
    std::vector<ReferenceEntry> entries;
    for (int n = 1; n <= 14; ++n) {
        ReferenceEntry e;
        e.n = n;
        e.u = k_by_n[n - 1]; // exact-length: u equals the reported k
        e.k = k_by_n[n - 1];
        // n = 2 sits below the bound too: C(2,1)/2 = 1 admits k = 1, but two
        // length-1 cubes cannot have distinct supports and cover everything
        e.below_bound = (n == 2 || n == 3 || n == 5 || n == 9 || n == 13);
        e.unconfirmed = (n == 13); // n = 3, 5, 9 were settled by SAT search
        entries.push_back(e);
    }
    return entries;
}

} // namespace

const std::vector<ReferenceEntry>& plain_reference() {
    static const auto entries = make_plain_reference();
    return entries;
}

const std::vector<ReferenceEntry>& cyclic_reference() {
    static const auto entries = make_cyclic_reference();
    return entries;
}

const std::vector<ReferenceEntry>& dihedral_reference() {
    static const auto entries = make_dihedral_reference();
    return entries;
}

int alternating_symmetric_reference(int n, int u) {
    return std::min(u - 1, n / 2);
}

const std::vector<ReferenceEntry>& full_window_reference() {
    static const auto entries = make_full_window_reference();
    return entries;
}

const std::vector<ReferenceEntry>& exact_length_reference() {
    static const auto entries = make_exact_length_reference();
    return entries;
}

// ---- table reproduction --------------------------------------------------

std::optional<TableKind> parse_table_kind(const std::string& name) {
    if (name == "plain") return TableKind::Plain;
    if (name == "cyclic_dihedral") return TableKind::CyclicDihedral;
    if (name == "alternating_symmetric") return TableKind::AlternatingSymmetric;
    return std::nullopt;
}

namespace {

std::optional<int> expected_cell(TableKind kind, GroupKind group, int n, int u) {
    const std::vector<ReferenceEntry>* entries = nullptr;
    switch (kind) {
        case TableKind::Plain: entries = &plain_reference(); break;
        case TableKind::CyclicDihedral:
            entries = group == GroupKind::Dihedral ? &dihedral_reference()
                                                   : &cyclic_reference();
            break;
        case TableKind::AlternatingSymmetric:
            return alternating_symmetric_reference(n, u);
    }
    for (const ReferenceEntry& e : *entries)
        if (e.n == n && e.u == u) return e.k;
    return std::nullopt;
}

} // namespace

TableReport reproduce_table(TableKind kind, int n_max, const SolveConfig& config) {
    TableReport report;
    report.kind = kind;
    report.n_max = n_max;

    std::vector<std::pair<GroupKind, GroupKind>> pairs;
    switch (kind) {
        case TableKind::Plain:
            pairs = {{GroupKind::Trivial, GroupKind::Trivial}};
            break;
        case TableKind::CyclicDihedral:
            pairs = {{GroupKind::Cyclic, GroupKind::Dihedral}};
            break;
        case TableKind::AlternatingSymmetric:
            pairs = {{GroupKind::Alternating, GroupKind::Symmetric}};
            break;
    }
    auto [first_kind, second_kind] = pairs.front();

    for (int n = 2; n <= n_max; ++n) {
        for (int u = 2; u <= n; ++u) {
            SearchResult first = max_k(n, u, GroupSpec{first_kind, n}, config);
            report.cells.push_back(first);
            std::ostringstream line;
            line << "n=" << n << " u=" << u << " k=" << first.k_found;

            if (second_kind != first_kind) {
                SearchResult second = max_k(n, u, GroupSpec{second_kind, n}, config);
                if (second.k_found != first.k_found ||
                    second.proven_optimal != first.proven_optimal) {
                    // the grids genuinely differ at some cells, so a pair
                    // difference only fails when it contradicts the reference
                    line << " pair differs (" << group_kind_name(second_kind)
                         << "=" << second.k_found << ")";
                }
                if (auto expected = expected_cell(kind, second_kind, n, u)) {
                    if (second.proven_optimal && second.k_found != *expected) {
                        line << " " << group_kind_name(second_kind)
                             << " DISAGREES (expected " << *expected << ")";
                        report.all_match = false;
                    }
                }
            }

            if (!first.proven_optimal) {
                line << (first.k_found < 0 ? " TIMEOUT" : " LOWER-BOUND-ONLY");
            }
            if (auto expected = expected_cell(kind, first_kind, n, u)) {
                if (first.proven_optimal) {
                    line << (first.k_found == *expected ? " agrees" : " DISAGREES");
                    if (first.k_found != *expected) {
                        line << " (expected " << *expected << ")";
                        report.all_match = false;
                    }
                } else {
                    line << " not attempted to completion (expected " << *expected << ")";
                }
            } else {
                line << " (no reference value)";
            }
            report.diff_lines.push_back(line.str());
        }
    }
    return report;
}

std::string TableReport::render_grid() const {
    std::map<std::pair<int, int>, const SearchResult*> by_cell;
    for (const SearchResult& r : cells) by_cell[{r.n, r.u}] = &r;
    std::ostringstream out;
    out << "  u\\n";
    for (int n = 2; n <= n_max; ++n) out << '\t' << n;
    out << '\n';
    for (int u = 2; u <= n_max; ++u) {
        out << "  " << u;
        for (int n = 2; n <= n_max; ++n) {
            out << '\t';
            auto it = by_cell.find({n, u});
            if (it == by_cell.end()) continue;
            const SearchResult& r = *it->second;
            if (r.k_found < 0) out << '?';
            else out << r.k_found << (r.proven_optimal ? "" : "?");
        }
        out << '\n';
    }
    return out.str();
}

std::string TableReport::render_csv() const {
    std::ostringstream out;
    out << "n,u,k_found,k_density_bound,proven_optimal,matched_bound\n";
    for (const SearchResult& r : cells)
        out << r.n << ',' << r.u << ',' << r.k_found << ',' << r.k_density_bound << ','
            << (r.proven_optimal ? 1 : 0) << ',' << (r.matched_bound ? 1 : 0) << '\n';
    return out.str();
}

// ---- persistence -----------------------------------------------------------

namespace {

std::string store_key(int n, int u, const std::string& group_name,
                      const std::string& options_key) {
    return std::to_string(n) + "/" + std::to_string(u) + "/" + group_name + "/" +
           options_key;
}

} // namespace

std::string search_result_to_json(const SearchResult& r, const std::string& options_key) {
    json j;
    j["key"] = store_key(r.n, r.u, r.group.name(), options_key);
    j["n"] = r.n;
    j["u"] = r.u;
    j["group"] = r.group.name();
    j["options"] = options_key;
    j["k_found"] = r.k_found;
    j["k_density_bound"] = r.k_density_bound;
    j["proven_optimal"] = r.proven_optimal;
    j["matched_bound"] = r.matched_bound;
    json statuses = json::object();
    for (const auto& [k, status] : r.status_per_k)
        statuses[std::to_string(k)] = solve_status_name(status);
    j["status_per_k"] = statuses;
    json runtimes = json::object();
    for (const auto& [k, seconds] : r.runtime_per_k)
        runtimes[std::to_string(k)] = seconds;
    j["runtime_per_k"] = runtimes;
    if (r.witness) {
        json cubes = json::array();
        for (const Cube& c : r.witness->cubes()) cubes.push_back(c.literals());
        j["witness"] = cubes;
    }
    return j.dump();
}

SearchResult search_result_from_json(const std::string& line) {
    json j = json::parse(line);
    SearchResult r;
    r.n = j.at("n").get<int>();
    r.u = j.at("u").get<int>();
    auto kind = parse_group_kind(j.at("group").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown group in stored record");
    r.group = GroupSpec{*kind, r.n};
    r.k_found = j.at("k_found").get<int>();
    r.k_density_bound = j.at("k_density_bound").get<int>();
    r.proven_optimal = j.at("proven_optimal").get<bool>();
    r.matched_bound = j.at("matched_bound").get<bool>();
    for (const auto& [k, status] : j.at("status_per_k").items()) {
        std::string name = status.get<std::string>();
        SolveStatus s = SolveStatus::Unknown;
        if (name == "SAT") s = SolveStatus::Satisfiable;
        else if (name == "UNSAT") s = SolveStatus::Unsatisfiable;
        else if (name == "TIMEOUT") s = SolveStatus::Timeout;
        r.status_per_k[std::stoi(k)] = s;
    }
    if (j.contains("runtime_per_k"))
        for (const auto& [k, seconds] : j.at("runtime_per_k").items())
            r.runtime_per_k[std::stoi(k)] = seconds.get<double>();
    if (j.contains("witness")) {
        std::vector<Cube> cubes;
        for (const auto& lits : j.at("witness"))
            cubes.push_back(Cube::from_literals(lits.get<std::vector<int>>()));
        r.witness = Dnf(r.n, std::move(cubes));
    }
    return r;
}

ResultStore::ResultStore(std::string path) : path_(std::move(path)) {}

std::optional<SearchResult> ResultStore::lookup(int n, int u, const GroupSpec& group,
                                                const std::string& options_key) const {
    std::ifstream in(path_);
    if (!in) return std::nullopt;
    std::string wanted = store_key(n, u, group.name(), options_key);
    std::string line;
    std::optional<SearchResult> found;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("key")) continue;
        if (j["key"].get<std::string>() == wanted)
            found = search_result_from_json(line); // last record wins
    }
    return found;
}

void ResultStore::record(const SearchResult& result, const std::string& options_key) {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open result store: " + path_);
    out << search_result_to_json(result, options_key) << '\n';
}

} // namespace ddnf
