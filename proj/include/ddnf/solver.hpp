#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ddnf/cnf.hpp"

namespace ddnf {

enum class SolveStatus { Satisfiable, Unsatisfiable, Timeout, Unknown };

std::string solve_status_name(SolveStatus s);

struct SolveStats {
    std::uint64_t decisions = 0;
    std::uint64_t propagations = 0;
    std::uint64_t conflicts = 0;
    double wall_seconds = 0.0;
};

// Which variable to branch on next. LowestIndex picks the smallest
// unassigned variable number; Activity uses conflict-driven scores with
// the same tie-break. Both are deterministic. Polarity is false-first
// either way, so cubes default to "not selected".
enum class DecisionOrder { LowestIndex, Activity };

struct SolveBudget {
    double time_limit_seconds = 60.0; // <= 0 means unlimited
    std::uint64_t conflict_limit = 0; // 0 means unlimited
    std::uint64_t seed = 0;           // reserved; the solver is deterministic
    DecisionOrder order = DecisionOrder::LowestIndex;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Unknown;
    std::vector<bool> model; // indexed 1..num_vars when Satisfiable
    SolveStats stats;
    std::string diagnostic; // set for Unknown
};

// Conflict-driven clause-learning search with two-watched-literal unit
// propagation. Any returned model is re-checked against the formula.
SolveOutcome solve_embedded(const CnfFormula& f, const SolveBudget& budget = {});

} // namespace ddnf
