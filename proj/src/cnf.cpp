#include "ddnf/cnf.hpp"

#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ddnf {

void CnfFormula::add_clause(Clause clause) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    std::unordered_set<int> seen;
    for (int lit : clause) {
        int var = std::abs(lit);
        if (lit == 0 || var > num_vars)
            throw std::invalid_argument("literal out of range: " + std::to_string(lit));
        if (seen.count(-lit))
            throw std::invalid_argument("tautological clause on variable " +
                                        std::to_string(var));
        seen.insert(lit);
    }
    clauses.push_back(std::move(clause));
}

bool CnfFormula::satisfied_by(const std::vector<bool>& model) const {
    if (static_cast<int>(model.size()) < num_vars + 1) return false;
    for (const Clause& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            if (model[std::abs(lit)] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

void write_dimacs(std::ostream& out, const CnfFormula& f,
                  const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "c " << c << '\n';
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& clause : f.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
}

std::string dimacs_to_string(const CnfFormula& f,
                             const std::vector<std::string>& comments) {
    std::ostringstream out;
    write_dimacs(out, f, comments);
    return out.str();
}

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    bool header_seen = false;
    long declared_clauses = -1;
    std::string line;
    Clause current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string fmt;
            if (!(ls >> fmt >> f.num_vars >> declared_clauses) || fmt != "cnf")
                throw std::invalid_argument("malformed DIMACS header: " + line);
            header_seen = true;
            continue;
        }
        if (!header_seen) throw std::invalid_argument("clause before DIMACS header");
        int lit = std::stoi(tok);
        while (true) {
            if (lit == 0) {
                f.add_clause(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
            if (!(ls >> lit)) break;
        }
    }
    if (!current.empty()) throw std::invalid_argument("unterminated final clause");
    if (!header_seen) throw std::invalid_argument("missing DIMACS header");
    if (declared_clauses >= 0 && declared_clauses != static_cast<long>(f.clauses.size()))
        throw std::invalid_argument("DIMACS clause count mismatch");
    return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CNF file: " + path);
    return read_dimacs(in);
}

} // namespace ddnf
