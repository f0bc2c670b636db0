#include <doctest.h>

#include <algorithm>
#include <set>

#include "ddnf/bounds.hpp"
#include "ddnf/encoder.hpp"

using namespace ddnf;

namespace {

Cube cube(std::initializer_list<int> lits) { return Cube::from_literals(lits); }

bool has_clause(const std::vector<Clause>& clauses, Clause wanted) {
    std::sort(wanted.begin(), wanted.end());
    for (Clause c : clauses) {
        std::sort(c.begin(), c.end());
        if (c == wanted) return true;
    }
    return false;
}

long expected_cube_count(int n, int k, int u) {
    auto choose = [](int n, int r) {
        long v = 1;
        for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
        return v;
    };
    long total = 0;
    for (int i = k; i <= u; ++i) total += choose(n, i) << i;
    return total;
}

} // namespace

TEST_CASE("cube enumeration") {
    CHECK(enumerate_cubes(10, 7, 10).size() == 33024);

    auto small = enumerate_cubes(2, 1, 2);
    CHECK(small.size() == 8); // 4 of length 1, 4 of length 2

    auto tiny = enumerate_cubes(1, 1, 1);
    REQUIRE(tiny.size() == 2);
    CHECK(tiny[0] == cube({1}));
    CHECK(tiny[1] == cube({-1}));

    for (int n = 1; n <= 6; ++n)
        for (int u = 1; u <= n; ++u)
            for (int k = 1; k <= u; ++k)
                CHECK(enumerate_cubes(n, k, u).size() ==
                      static_cast<std::size_t>(expected_cube_count(n, k, u)));
}

TEST_CASE("tautology clauses") {
    VarMap vm1(enumerate_cubes(1, 1, 1));
    std::vector<Clause> clauses;
    REQUIRE(encode_tautology(1, vm1, clauses));
    REQUIRE(clauses.size() == 2);
    CHECK(clauses[0] == Clause{vm1.var_of(cube({-1}))}); // assignment x1=F
    CHECK(clauses[1] == Clause{vm1.var_of(cube({1}))});  // assignment x1=T

    VarMap vm2(enumerate_cubes(2, 1, 2));
    clauses.clear();
    REQUIRE(encode_tautology(2, vm2, clauses));
    REQUIRE(clauses.size() == 4);
    Clause at_ff = clauses[0];
    std::sort(at_ff.begin(), at_ff.end());
    CHECK(at_ff == Clause{vm2.var_of(cube({-1})), vm2.var_of(cube({-2})),
                          vm2.var_of(cube({-1, -2}))});

    // full-length cubes only: each assignment names exactly its own cube
    VarMap vm22(enumerate_cubes(2, 2, 2));
    clauses.clear();
    REQUIRE(encode_tautology(2, vm22, clauses));
    for (const Clause& c : clauses) CHECK(c.size() == 1);
}

TEST_CASE("binary at-most-one") {
    SUBCASE("support of size 1") {
        VarMap vm(enumerate_cubes(1, 1, 1));
        std::vector<Clause> clauses;
        encode_amo_binary({1, 2}, vm, clauses);
        CHECK(vm.total_vars() == 3);
        REQUIRE(clauses.size() == 2);
        CHECK(clauses[0] == Clause{-1, -3});
        CHECK(clauses[1] == Clause{-2, 3});
    }
    SUBCASE("support of size 2 blocks any double selection") {
        VarMap vm(enumerate_cubes(2, 2, 2));
        std::vector<Clause> clauses;
        encode_amo_binary({1, 2, 3, 4}, vm, clauses);
        CHECK(vm.total_vars() == 6);
        CHECK(clauses.size() == 8);
        // truth-table the 6 variables
        for (int bits = 0; bits < 64; ++bits) {
            std::vector<bool> model(7);
            for (int v = 1; v <= 6; ++v) model[v] = (bits >> (v - 1)) & 1;
            bool all_sat = true;
            for (const Clause& c : clauses) {
                bool sat = false;
                for (int lit : c) sat |= model[std::abs(lit)] == (lit > 0);
                all_sat &= sat;
            }
            int selected = model[1] + model[2] + model[3] + model[4];
            if (all_sat) CHECK(selected <= 1);
            if (selected == 0) {
                // zero selection is always extendable: some codeword fits
                bool some = false;
                for (int aux = 0; aux < 4; ++aux) {
                    std::vector<bool> m = model;
                    m[5] = aux & 1;
                    m[6] = aux & 2;
                    bool ok = true;
                    for (const Clause& c : clauses) {
                        bool sat = false;
                        for (int lit : c) sat |= m[std::abs(lit)] == (lit > 0);
                        ok &= sat;
                    }
                    some |= ok;
                }
                CHECK(some);
            }
        }
    }
}

TEST_CASE("invariance clauses") {
    SUBCASE("cyclic rotation on singletons") {
        VarMap vm(enumerate_cubes(3, 1, 3));
        std::vector<Clause> clauses;
        encode_invariance(vm, GroupSpec{GroupKind::Cyclic, 3}, clauses);
        CHECK(has_clause(clauses, {-vm.var_of(cube({1})), vm.var_of(cube({2}))}));
    }
    SUBCASE("rotation on the length-3 example cube") {
        VarMap vm(enumerate_cubes(4, 3, 4));
        std::vector<Clause> clauses;
        encode_invariance(vm, GroupSpec{GroupKind::Cyclic, 4}, clauses);
        CHECK(has_clause(clauses, {-vm.var_of(cube({1, -2, 3})),
                                   vm.var_of(cube({2, -3, 4}))}));
    }
    SUBCASE("trivial group adds nothing") {
        VarMap vm(enumerate_cubes(3, 1, 3));
        std::vector<Clause> clauses;
        encode_invariance(vm, GroupSpec{GroupKind::Trivial, 3}, clauses);
        CHECK(clauses.empty());
    }
}

TEST_CASE("symmetry breaking clause families") {
    VarMap vm(enumerate_cubes(4, 2, 4));
    std::vector<Clause> clauses;
    encode_symmetry_breaking(4, 2, 4, vm, clauses);

    // (a) the all-positive prefix cube is forced
    CHECK(has_clause(clauses, {vm.var_of(cube({1, 2}))}));

    // (b) on support {1,3}: x1&x3 and -x1&x3 allowed, the patterns with
    // negated x3 are forbidden
    CHECK_FALSE(has_clause(clauses, {-vm.var_of(cube({1, 3}))}));
    CHECK_FALSE(has_clause(clauses, {-vm.var_of(cube({-1, 3}))}));
    CHECK(has_clause(clauses, {-vm.var_of(cube({1, -3}))}));
    CHECK(has_clause(clauses, {-vm.var_of(cube({-1, -3}))}));

    // (c) ordering chain at n=5, k=2
    VarMap vm5(enumerate_cubes(5, 2, 5));
    clauses.clear();
    encode_symmetry_breaking(5, 2, 5, vm5, clauses);
    CHECK(has_clause(clauses, {-vm5.var_of(cube({1, 5})), vm5.var_of(cube({1, 4}))}));
    CHECK(has_clause(clauses, {-vm5.var_of(cube({1, 4})), vm5.var_of(cube({1, 3}))}));
}

TEST_CASE("subsumption exclusion") {
    VarMap vm(enumerate_cubes(2, 1, 2));
    std::vector<Clause> clauses;
    encode_subsumption_exclusion(vm, clauses);
    CHECK(has_clause(clauses, {-vm.var_of(cube({1})), -vm.var_of(cube({1, 2}))}));
    // incomparable literal sets stay unconstrained
    CHECK_FALSE(has_clause(clauses, {-vm.var_of(cube({1})), -vm.var_of(cube({-1, 2}))}));

    EncodeOptions off;
    EncodedInstance inst = build_instance(2, 2, 1, GroupSpec{}, off);
    EncodeOptions on;
    on.forbid_subsumed = true;
    EncodedInstance with = build_instance(2, 2, 1, GroupSpec{}, on);
    CHECK(with.cnf.clauses.size() > inst.cnf.clauses.size());
}

TEST_CASE("build_instance shape at (2,2,1)") {
    EncodedInstance inst = build_instance(2, 2, 1, GroupSpec{}, EncodeOptions{});
    CHECK_FALSE(inst.trivially_unsat);
    CHECK(inst.vars.num_cube_vars() == 8);
    // one aux bit per singleton support, two for the full support
    CHECK(inst.vars.total_vars() == 12);
    // 4 tautology clauses + (2 supports * 2 cubes * 1 bit + 4 cubes * 2 bits)
    CHECK(inst.cnf.clauses.size() == 4 + 12);
}

TEST_CASE("build_instance validates options") {
    EncodeOptions sb;
    sb.symmetry_breaking = true;
    CHECK_THROWS_AS(build_instance(3, 3, 1, GroupSpec{GroupKind::Cyclic, 3}, sb),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_instance(3, 2, 3, GroupSpec{}, EncodeOptions{}),
                    std::invalid_argument);
}

TEST_CASE("determinism: identical DIMACS on repeated builds") {
    EncodeOptions options;
    options.symmetry_breaking = true;
    std::string first = build_instance(4, 4, 2, GroupSpec{}, options).to_dimacs();
    std::string second = build_instance(4, 4, 2, GroupSpec{}, options).to_dimacs();
    CHECK(first == second);
    CHECK(first.find("p cnf ") != std::string::npos);
    CHECK(first.find("c cube 1 = ") != std::string::npos);
    CHECK(first.find('\r') == std::string::npos);
}

TEST_CASE("cube variable numbering is canonical and contiguous") {
    VarMap vm(enumerate_cubes(3, 1, 2));
    for (int v = 1; v < vm.num_cube_vars(); ++v)
        CHECK(vm.cube_of(v) < vm.cube_of(v + 1));
    CHECK(vm.aux_var_start() == vm.num_cube_vars() + 1);
    CHECK_THROWS_AS(vm.var_of(cube({1, 2, 3})), std::invalid_argument);
}
