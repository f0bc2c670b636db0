#include "ddnf/bounds.hpp"

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ddnf {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Row n of Pascal's triangle, exact.
std::vector<BigInt> binomial_row(int n) {
    std::vector<BigInt> row(n + 1, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i - 1; j >= 1; --j) row[j] += row[j - 1];
    return row;
}

bool feasible(const std::vector<BigInt>& row, int u, int k) {
    // sum_{i=k}^{u} C(n,i) 2^{u-i} >= 2^u
    BigInt lhs = 0;
    for (int i = k; i <= u; ++i) lhs += row[i] << (u - i);
    return lhs >= (BigInt(1) << u);
}

} // namespace

bool density_feasible(int n, int u, int k) {
    if (k < 0 || k > u || u > n)
        throw std::invalid_argument("density_feasible requires 0 <= k <= u <= n, got n=" +
                                    std::to_string(n) + " u=" + std::to_string(u) +
                                    " k=" + std::to_string(k));
    return feasible(binomial_row(n), u, k);
}

BoundResult density_bound(int n, int u) {
    if (u < 1 || u > n)
        throw std::invalid_argument("density_bound requires 1 <= u <= n");
    auto row = binomial_row(n);
    BoundResult result;
    result.n = n;
    result.u = u;
    result.per_k_feasible.resize(u + 1);
    for (int k = 0; k <= u; ++k) {
        bool ok = feasible(row, u, k);
        result.per_k_feasible[k] = ok;
        if (ok) result.k_max_bound = k;
    }
    return result;
}

} // namespace ddnf
