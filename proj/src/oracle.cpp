#include "ddnf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ddnf {

namespace {

struct SearchState {
    int n = 0, u = 0, k = 0;
    GroupSpec group;
    OracleOptions options;
    std::vector<std::uint32_t> supports;     // decreasing size, then ascending
    std::vector<std::uint64_t> suffix_capacity; // max coverable from support i on
    std::vector<Permutation> neighbor_maps;  // generators and their inverses

    // per support mask: -1 undecided, 0 no cube, 1 cube chosen
    std::vector<std::int8_t> decided;
    std::vector<Cube> chosen;
    std::vector<std::uint16_t> cover_count;
    std::uint64_t uncovered = 0;
    std::uint64_t nodes = 0;
    std::vector<Cube> picked;
    std::optional<Dnf> witness;

    bool consistent_choice(std::uint32_t support, bool has_cube, const Cube& c) const {
        for (const Permutation& g : neighbor_maps) {
            Cube support_image = g.apply(Cube{support, 0});
            std::uint32_t image = support_image.support;
            if (image == support) {
                if (has_cube && g.apply(c) != c) return false;
                continue;
            }
            if (decided[image] < 0) continue;
            if (has_cube) {
                if (decided[image] == 0 || chosen[image] != g.apply(c)) return false;
            } else {
                if (decided[image] != 0) return false;
            }
        }
        return true;
    }

    void add_cube(const Cube& c) {
        const std::uint32_t all = full_mask(n);
        const std::uint32_t base = c.support & ~c.polarity;
        const std::uint32_t free = all & ~c.support;
        std::uint32_t sub = free;
        while (true) {
            if (cover_count[base | sub]++ == 0) --uncovered;
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }

    void remove_cube(const Cube& c) {
        const std::uint32_t all = full_mask(n);
        const std::uint32_t base = c.support & ~c.polarity;
        const std::uint32_t free = all & ~c.support;
        std::uint32_t sub = free;
        while (true) {
            if (--cover_count[base | sub] == 0) ++uncovered;
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }

    bool dfs(std::size_t depth) {
        ++nodes;
        if (options.prune && uncovered > suffix_capacity[depth]) return false;
        if (depth == supports.size()) {
            if (uncovered != 0) return false;
            Dnf candidate(n, picked);
            if (!verify(candidate, k, u, group).all_ok()) return false;
            witness = std::move(candidate);
            return true;
        }
        const std::uint32_t support = supports[depth];
        const bool filter = !group.is_trivial();

        // branch: no cube on this support
        if (!filter || consistent_choice(support, false, Cube{})) {
            decided[support] = 0;
            if (dfs(depth + 1)) return true;
            decided[support] = -1;
        }
        // branch: each sign pattern
        std::uint32_t pol = 0;
        while (true) {
            Cube c{support, pol};
            if (!filter || consistent_choice(support, true, c)) {
                decided[support] = 1;
                chosen[support] = c;
                picked.push_back(c);
                add_cube(c);
                if (dfs(depth + 1)) return true;
                remove_cube(c);
                picked.pop_back();
                decided[support] = -1;
            }
            if (pol == support) break;
            pol = (pol - support) & support;
        }
        return false;
    }
};

} // namespace

OracleResult exists_bruteforce(int n, int u, int k, const GroupSpec& group,
                               const OracleOptions& options) {
    if (k < 1 || k > u || u > n || n > kMaxVars)
        throw std::invalid_argument("oracle requires 1 <= k <= u <= n <= 24");
    if (!group.is_trivial() && group.n != n)
        throw std::invalid_argument("group degree does not match n");
    if (n > 3 && !options.best_effort)
        throw CapacityError("brute-force oracle is exhaustive only up to n = 3; "
                            "pass best_effort to go higher");

    SearchState state;
    state.n = n;
    state.u = u;
    state.k = k;
    state.group = group;
    state.options = options;

    const std::uint32_t all = full_mask(n);
    for (std::uint32_t sup = 1; sup <= all; ++sup) {
        int len = std::popcount(sup);
        if (len >= k && len <= u) state.supports.push_back(sup);
    }
    // large supports first: their cubes constrain coverage the most
    std::stable_sort(state.supports.begin(), state.supports.end(),
                     [](std::uint32_t a, std::uint32_t b) {
                         return std::popcount(a) > std::popcount(b);
                     });

    state.suffix_capacity.assign(state.supports.size() + 1, 0);
    for (std::size_t i = state.supports.size(); i-- > 0;)
        state.suffix_capacity[i] = state.suffix_capacity[i + 1] +
            (1ull << (n - std::popcount(state.supports[i])));

    for (const Permutation& g : generators(group)) {
        state.neighbor_maps.push_back(g);
        Permutation inv = g.inverse();
        if (inv != g) state.neighbor_maps.push_back(std::move(inv));
    }

    state.decided.assign(all + 1, -1);
    state.chosen.assign(all + 1, Cube{});
    state.cover_count.assign(1ull << n, 0);
    state.uncovered = 1ull << n;

    OracleResult result;
    result.exists = state.dfs(0);
    result.witness = std::move(state.witness);
    result.nodes_explored = state.nodes;
    return result;
}

} // namespace ddnf
