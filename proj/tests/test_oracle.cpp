#include <doctest.h>

#include "ddnf/oracle.hpp"

using namespace ddnf;

TEST_CASE("existence at tiny scale") {
    auto found = exists_bruteforce(2, 2, 1, GroupSpec{});
    REQUIRE(found.exists);
    REQUIRE(found.witness.has_value());
    CHECK(verify(*found.witness, 1, 2).all_ok());

    CHECK_FALSE(exists_bruteforce(3, 1, 1, GroupSpec{}).exists);
    CHECK_FALSE(exists_bruteforce(1, 1, 1, GroupSpec{}).exists);
}

TEST_CASE("group-constrained existence") {
    // the rotation-invariant three-cube tautology needs length-2 cubes
    CHECK(exists_bruteforce(2, 2, 1, GroupSpec{GroupKind::Symmetric, 2}).exists);
    auto c3 = exists_bruteforce(3, 3, 1, GroupSpec{GroupKind::Cyclic, 3});
    REQUIRE(c3.exists);
    CHECK(verify(*c3.witness, 1, 3, GroupSpec{GroupKind::Cyclic, 3}).all_ok());
}

TEST_CASE("capacity guard") {
    CHECK_THROWS_AS(exists_bruteforce(4, 4, 1, GroupSpec{}), CapacityError);
    OracleOptions best_effort;
    best_effort.best_effort = true;
    CHECK(exists_bruteforce(4, 4, 2, GroupSpec{}, best_effort).exists);
    CHECK_THROWS_AS(exists_bruteforce(2, 2, 0, GroupSpec{}), std::invalid_argument);
}

TEST_CASE("pruning never changes the answer (n <= 2, all groups)") {
    for (GroupKind kind : {GroupKind::Trivial, GroupKind::Cyclic, GroupKind::Dihedral,
                           GroupKind::Alternating, GroupKind::Symmetric}) {
        for (int n = 1; n <= 2; ++n)
            for (int u = 1; u <= n; ++u)
                for (int k = 1; k <= u; ++k) {
                    GroupSpec g{kind, n};
                    OracleOptions pruned, unpruned;
                    unpruned.prune = false;
                    CHECK(exists_bruteforce(n, u, k, g, pruned).exists ==
                          exists_bruteforce(n, u, k, g, unpruned).exists);
                }
    }
}

TEST_CASE("pruning explores fewer nodes") {
    OracleOptions pruned, unpruned;
    unpruned.prune = false;
    auto fast = exists_bruteforce(3, 1, 1, GroupSpec{}, pruned);
    auto slow = exists_bruteforce(3, 1, 1, GroupSpec{}, unpruned);
    CHECK(fast.exists == slow.exists);
    CHECK(fast.nodes_explored <= slow.nodes_explored);
}
