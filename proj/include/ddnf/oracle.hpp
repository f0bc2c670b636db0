#pragma once

#include <cstdint>
#include <optional>

#include "ddnf/dnf.hpp"
#include "ddnf/group.hpp"

namespace ddnf {

struct OracleResult {
    bool exists = false;
    std::optional<Dnf> witness; // present iff exists; passes verify
    std::uint64_t nodes_explored = 0;
};

struct OracleOptions {
    bool prune = true;
    // exhaustive guarantee ends at n = 3; larger n needs the explicit
    // best-effort opt-in
    bool best_effort = false;
};

// Depth-first existence search: per support, pick "no cube" or one of
// its 2^s sign patterns; count-based coverage pruning; per-generator
// consistency filtering for non-trivial groups; every witness is
// re-verified before being returned.
OracleResult exists_bruteforce(int n, int u, int k, const GroupSpec& group,
                               const OracleOptions& options = {});

} // namespace ddnf
