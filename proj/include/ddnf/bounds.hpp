#pragma once

#include <vector>

namespace ddnf {

// Density upper bound on the minimal cube length k for given (n, u):
// k is feasible iff sum_{i=k}^{u} C(n,i) 2^{-i} >= 1.
struct BoundResult {
    int n = 0;
    int u = 0;
    int k_max_bound = -1;            // largest feasible k, -1 if none
    std::vector<bool> per_k_feasible; // index k, for k = 0..u
};

// Decides the density inequality in exact integer arithmetic
// (both sides scaled by 2^u). Requires 0 <= k <= u <= n.
bool density_feasible(int n, int u, int k);

// per_k table plus the maximal feasible k. Requires 1 <= u <= n.
BoundResult density_bound(int n, int u);

} // namespace ddnf
