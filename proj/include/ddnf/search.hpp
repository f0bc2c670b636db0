#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddnf/bounds.hpp"
#include "ddnf/dnf.hpp"
#include "ddnf/encoder.hpp"
#include "ddnf/group.hpp"
#include "ddnf/solver.hpp"

namespace ddnf {

struct SolveConfig {
    double timeout_seconds = 60.0;    // per instance; <= 0 unlimited
    std::string external_command;     // empty = embedded solver
    // activity order by default: the lowest-index heuristic stalls for
    // minutes on plain full-window instances from n = 5 up
    DecisionOrder order = DecisionOrder::Activity;
    bool symmetry_breaking = true;    // applied only for the trivial group
    std::uint64_t seed = 0;

    std::string options_key() const;
};

struct SearchResult {
    int n = 0;
    int u = 0;
    GroupSpec group;
    int k_density_bound = -1;
    int k_found = -1; // -1 undetermined, 0 no nontrivial solution
    bool proven_optimal = false;
    bool matched_bound = false;
    std::map<int, SolveStatus> status_per_k;
    std::map<int, double> runtime_per_k;
    std::optional<Dnf> witness; // for k_found >= 1
};

// Selected cubes of a satisfying model, verified against (n,u,k,group).
// A verification failure is a pipeline bug and throws with both the
// decoded DNF and the report embedded in the message.
Dnf decode_and_verify(const std::vector<bool>& model, const VarMap& vm,
                      int n, int u, int k, const GroupSpec& group);

// Largest k admitting a qualifying DNF: walks k downward from the
// density bound until the first SAT. A timeout above a found SAT leaves
// the result a lower bound only (proven_optimal false).
SearchResult max_k(int n, int u, const GroupSpec& group, const SolveConfig& config = {});

struct ExactResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<Dnf> witness;
    double wall_seconds = 0.0;
};

// Single instance with u = k (all cubes of length exactly k).
ExactResult exact_k(int n, int k, const GroupSpec& group, const SolveConfig& config = {});

// ---- reference grids -----------------------------------------------------

struct ReferenceEntry {
    int n = 0;
    int u = 0;
    int k = 0;
    bool below_bound = false; // known value lies strictly below the density bound
    bool unconfirmed = false; // optimality of the value was left open
};

// Plain (no group) grid from prior published results, n and u up to 10.
const std::vector<ReferenceEntry>& plain_reference();
// Rotation-group grids recomputed and cross-checked against the
// brute-force search by this toolkit; they agree except at (6,6),
// where the cyclic value is 4 and the dihedral value is 3.
const std::vector<ReferenceEntry>& cyclic_reference();
const std::vector<ReferenceEntry>& dihedral_reference();
// A_n / S_n values follow min(u-1, floor(n/2)).
int alternating_symmetric_reference(int n, int u);
// Full-length window u = n, n up to 14.
const std::vector<ReferenceEntry>& full_window_reference();
// Exact-length variant u = k, n up to 14.
const std::vector<ReferenceEntry>& exact_length_reference();

// ---- table reproduction --------------------------------------------------

enum class TableKind { Plain, CyclicDihedral, AlternatingSymmetric };

std::optional<TableKind> parse_table_kind(const std::string& name);

struct TableReport {
    TableKind kind = TableKind::Plain;
    int n_max = 0;
    // one result per (n,u); for paired-group tables these hold the first
    // group's results and pair agreement is recorded separately
    std::vector<SearchResult> cells;
    std::vector<std::string> diff_lines; // agreements/disagreements/timeouts
    bool all_match = true;

    std::string render_grid() const;
    std::string render_csv() const;
};

TableReport reproduce_table(TableKind kind, int n_max, const SolveConfig& config = {});

// ---- persistence -----------------------------------------------------------

// Append-only line-delimited JSON store keyed by (n,u,group,options).
class ResultStore {
public:
    explicit ResultStore(std::string path);

    std::optional<SearchResult> lookup(int n, int u, const GroupSpec& group,
                                       const std::string& options_key) const;
    void record(const SearchResult& result, const std::string& options_key);

private:
    std::string path_;
};

std::string search_result_to_json(const SearchResult& r, const std::string& options_key);
SearchResult search_result_from_json(const std::string& line);

} // namespace ddnf
