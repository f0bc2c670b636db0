#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddnf {

using Clause = std::vector<int>;

// Clauses over SAT variables 1..num_vars; positive literal = variable,
// negative = its negation. No empty or tautological clauses.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    void add_clause(Clause clause);

    // True iff every clause has a literal made true by the model.
    // model[v] holds the value of variable v, model[0] is unused.
    bool satisfied_by(const std::vector<bool>& model) const;
};

void write_dimacs(std::ostream& out, const CnfFormula& f,
                  const std::vector<std::string>& comments = {});
std::string dimacs_to_string(const CnfFormula& f,
                             const std::vector<std::string>& comments = {});
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);

} // namespace ddnf
