#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ddnf/cnf.hpp"
#include "ddnf/cube.hpp"
#include "ddnf/dnf.hpp"
#include "ddnf/group.hpp"

namespace ddnf {

// All cubes with k <= length <= u over n variables, in canonical order
// (support ascending as integer, then polarity ascending).
// Count is sum_{i=k}^{u} C(n,i) 2^i.
std::vector<Cube> enumerate_cubes(int n, int k, int u);

// Cube selector variables are 1..m in canonical cube order; auxiliary
// variables live strictly above m.
class VarMap {
public:
    VarMap() = default;
    explicit VarMap(std::vector<Cube> cubes);

    int var_of(const Cube& c) const; // throws if unknown
    int var_of_or_zero(const Cube& c) const;
    const Cube& cube_of(int var) const;
    bool is_cube_var(int var) const { return var >= 1 && var <= num_cube_vars(); }
    int num_cube_vars() const { return static_cast<int>(cubes_.size()); }
    const std::vector<Cube>& cubes() const { return cubes_; }

    int aux_var_start() const { return num_cube_vars() + 1; }
    int total_vars() const { return total_vars_; }
    int allocate_aux(int count);

private:
    std::vector<Cube> cubes_;
    std::unordered_map<std::uint64_t, int> index_;
    int total_vars_ = 0;
};

struct EncodeOptions {
    bool symmetry_breaking = false;
    bool forbid_subsumed = false;
};

// A compiled instance. When trivially_unsat is set, some assignment is
// covered by no cube in the window and the formula is not populated.
struct EncodedInstance {
    bool trivially_unsat = false;
    CnfFormula cnf;
    VarMap vars;

    // DIMACS with "c cube <var> = <lits>" comments mapping selectors.
    std::string to_dimacs() const;
};

// One clause per assignment: at least one cube true under it is selected.
// Returns false (and leaves `out` untouched) when some assignment is
// covered by no cube.
bool encode_tautology(int n, const VarMap& vm, std::vector<Clause>& out);

// Binary at-most-one over the 2^s selectors sharing one support:
// s fresh bits, each selected cube forces its codeword. 2^s * s clauses.
void encode_amo_binary(const std::vector<int>& group_vars, VarMap& vm,
                       std::vector<Clause>& out);

// For each cube c and each group generator h: selected(c) -> selected(h c).
void encode_invariance(const VarMap& vm, const GroupSpec& g, std::vector<Clause>& out);

// Plain-group symmetry breaking (requires k >= 1):
//  (a) fix the cube x1 & ... & xk,
//  (b) on support {1..k-1, k+1} allow only negation-prefix patterns,
//  (c) chain all-positive cubes on supports {1..k-1, i} downward in i.
void encode_symmetry_breaking(int n, int k, int u, const VarMap& vm,
                              std::vector<Clause>& out);

// Forbid selecting two cubes whose literal sets are strictly nested.
void encode_subsumption_exclusion(const VarMap& vm, std::vector<Clause>& out);

// Full instance: tautology + per-support AMO + optional invariance,
// symmetry breaking, and subsumption exclusion. Deterministic.
// symmetry_breaking is rejected for non-trivial groups.
EncodedInstance build_instance(int n, int u, int k, const GroupSpec& group,
                               const EncodeOptions& options);

// Cubes whose selector variables are true in the model.
Dnf decode_model(const std::vector<bool>& model, const VarMap& vm, int n);

} // namespace ddnf
