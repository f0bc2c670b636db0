#include "ddnf/encoder.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace ddnf {

namespace {

std::uint64_t cube_key(const Cube& c) {
    return (static_cast<std::uint64_t>(c.support) << 32) | c.polarity;
}

} // namespace

std::vector<Cube> enumerate_cubes(int n, int k, int u) {
    if (k < 1 || k > u || u > n || n > kMaxVars)
        throw std::invalid_argument("enumerate_cubes requires 1 <= k <= u <= n <= 24");
    std::vector<Cube> cubes;
    const std::uint32_t all = full_mask(n);
    for (std::uint32_t sup = 1; sup <= all; ++sup) {
        int len = std::popcount(sup);
        if (len < k || len > u) continue;
        // submasks in ascending numeric order
        std::uint32_t pol = 0;
        while (true) {
            cubes.emplace_back(sup, pol);
            if (pol == sup) break;
            pol = (pol - sup) & sup;
        }
    }
    return cubes;
}

VarMap::VarMap(std::vector<Cube> cubes) : cubes_(std::move(cubes)) {
    index_.reserve(cubes_.size() * 2);
    for (std::size_t i = 0; i < cubes_.size(); ++i)
        index_.emplace(cube_key(cubes_[i]), static_cast<int>(i) + 1);
    total_vars_ = static_cast<int>(cubes_.size());
}

int VarMap::var_of(const Cube& c) const {
    auto it = index_.find(cube_key(c));
    if (it == index_.end())
        throw std::invalid_argument("cube has no selector variable: " + c.to_string());
    return it->second;
}

int VarMap::var_of_or_zero(const Cube& c) const {
    auto it = index_.find(cube_key(c));
    return it == index_.end() ? 0 : it->second;
}

const Cube& VarMap::cube_of(int var) const {
    if (!is_cube_var(var)) throw std::invalid_argument("not a cube variable");
    return cubes_[var - 1];
}

int VarMap::allocate_aux(int count) {
    int first = total_vars_ + 1;
    total_vars_ += count;
    return first;
}

bool encode_tautology(int n, const VarMap& vm, std::vector<Clause>& out) {
    const std::uint64_t count = 1ull << n;
    std::vector<Clause> clauses(count);
    const std::uint32_t all = full_mask(n);
    for (int var = 1; var <= vm.num_cube_vars(); ++var) {
        const Cube& c = vm.cube_of(var);
        const std::uint32_t base = c.support & ~c.polarity;
        const std::uint32_t free = all & ~c.support;
        std::uint32_t sub = free;
        while (true) {
            clauses[base | sub].push_back(var);
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    for (const Clause& cl : clauses)
        if (cl.empty()) return false;
    for (Clause& cl : clauses) out.push_back(std::move(cl));
    return true;
}

void encode_amo_binary(const std::vector<int>& group_vars, VarMap& vm,
                       std::vector<Clause>& out) {
    const std::size_t count = group_vars.size();
    if (count <= 1) return;
    int bits = 0;
    while ((1u << bits) < count) ++bits;
    int aux_base = vm.allocate_aux(bits);
    for (std::size_t j = 0; j < count; ++j) {
        for (int t = 0; t < bits; ++t) {
            int aux = aux_base + t;
            out.push_back({-group_vars[j], ((j >> t) & 1u) ? aux : -aux});
        }
    }
}

void encode_invariance(const VarMap& vm, const GroupSpec& g, std::vector<Clause>& out) {
    auto gens = generators(g);
    for (int var = 1; var <= vm.num_cube_vars(); ++var) {
        const Cube& c = vm.cube_of(var);
        for (const Permutation& h : gens) {
            Cube image = h.apply(c);
            assert(image.length() == c.length());
            int image_var = vm.var_of(image);
            if (image_var != var) out.push_back({-var, image_var});
        }
    }
}

void encode_symmetry_breaking(int n, int k, int u, const VarMap& vm,
                              std::vector<Clause>& out) {
    if (k < 1) throw std::invalid_argument("symmetry breaking requires k >= 1");
    (void)u;
    const std::uint32_t prefix = full_mask(k); // {1..k}

    // (a) some cube of length k may be fixed to x1 & ... & xk
    out.push_back({vm.var_of(Cube{prefix, 0})});

    if (k + 1 > n) return;
    const std::uint32_t head = full_mask(k - 1); // {1..k-1}

    // (b) on support {1..k-1, k+1} only negation-prefix patterns survive:
    // polarity must be {1..i} for some 0 <= i <= k-1, x_{k+1} positive
    const std::uint32_t support_b = head | (1u << k); // bit k is variable k+1
    std::uint32_t pol = 0;
    while (true) {
        bool allowed = (pol & ~head) == 0 && (pol & (pol + 1)) == 0; // low-bit run
        if (!allowed) out.push_back({-vm.var_of(Cube{support_b, pol})});
        if (pol == support_b) break;
        pol = (pol - support_b) & support_b;
    }

    // (c) all-positive cubes on {1..k-1, i} chain downward in i
    for (int i = k + 1; i + 1 <= n; ++i) {
        Cube lower{head | (1u << (i - 1)), 0};
        Cube upper{head | (1u << i), 0};
        out.push_back({-vm.var_of(upper), vm.var_of(lower)});
    }
}

void encode_subsumption_exclusion(const VarMap& vm, std::vector<Clause>& out) {
    // for each cube, forbid co-selection with any selectable proper sub-cube
    for (int var = 1; var <= vm.num_cube_vars(); ++var) {
        const Cube& c = vm.cube_of(var);
        std::uint32_t sub = (c.support - 1) & c.support; // proper submasks, descending
        for (; ; sub = (sub - 1) & c.support) {
            if (sub != 0) {
                int smaller_var = vm.var_of_or_zero(Cube{sub, c.polarity & sub});
                if (smaller_var != 0) out.push_back({-smaller_var, -var});
            }
            if (sub == 0) break;
        }
    }
}

EncodedInstance build_instance(int n, int u, int k, const GroupSpec& group,
                               const EncodeOptions& options) {
    if (k < 1 || k > u || u > n || n > kMaxVars)
        throw std::invalid_argument("build_instance requires 1 <= k <= u <= n <= 24");
    if (options.symmetry_breaking && !group.is_trivial())
        throw std::invalid_argument("symmetry breaking is only valid for the trivial group");

    EncodedInstance inst;
    inst.vars = VarMap(enumerate_cubes(n, k, u));

    std::vector<Clause> clauses;
    if (!encode_tautology(n, inst.vars, clauses)) {
        inst.trivially_unsat = true;
        return inst;
    }

    // group selectors by support; cubes are contiguous per support in
    // canonical order
    const auto& cubes = inst.vars.cubes();
    std::size_t i = 0;
    while (i < cubes.size()) {
        std::size_t j = i;
        std::vector<int> group_vars;
        while (j < cubes.size() && cubes[j].support == cubes[i].support)
            group_vars.push_back(static_cast<int>(++j));
        encode_amo_binary(group_vars, inst.vars, clauses);
        i = j;
    }

    if (!group.is_trivial()) encode_invariance(inst.vars, group, clauses);
    if (options.symmetry_breaking) encode_symmetry_breaking(n, k, u, inst.vars, clauses);
    if (options.forbid_subsumed) encode_subsumption_exclusion(inst.vars, clauses);

    inst.cnf.num_vars = inst.vars.total_vars();
    for (Clause& cl : clauses) inst.cnf.add_clause(std::move(cl));
    return inst;
}

std::string EncodedInstance::to_dimacs() const {
    std::vector<std::string> comments;
    comments.reserve(vars.num_cube_vars());
    for (int var = 1; var <= vars.num_cube_vars(); ++var)
        comments.push_back("cube " + std::to_string(var) + " = " +
                           vars.cube_of(var).to_string());
    return dimacs_to_string(cnf, comments);
}

Dnf decode_model(const std::vector<bool>& model, const VarMap& vm, int n) {
    std::vector<Cube> cubes;
    for (int var = 1; var <= vm.num_cube_vars(); ++var)
        if (model[var]) cubes.push_back(vm.cube_of(var));
    return Dnf(n, std::move(cubes));
}

} // namespace ddnf
