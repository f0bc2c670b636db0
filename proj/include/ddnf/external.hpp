#pragma once

#include <string>

#include "ddnf/cnf.hpp"
#include "ddnf/solver.hpp"

namespace ddnf {

// Runs an external DIMACS solver on f. The command may contain a {cnf}
// placeholder for the instance path; otherwise the path is appended.
// Accepts "s SATISFIABLE"/"s UNSATISFIABLE" plus "v" model lines, or
// exit codes 10/20 when no status line is printed. Any model is
// re-validated against f; a model that fails validation is a hard error.
SolveOutcome solve_external(const CnfFormula& f, const std::string& solver_command,
                            const SolveBudget& budget = {});

} // namespace ddnf
