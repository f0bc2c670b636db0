#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ddnf/cube.hpp"

namespace ddnf {

// A bijection on {1..n}; images[i-1] = g(i).
struct Permutation {
    std::vector<int> images;

    explicit Permutation(std::vector<int> img);
    static Permutation identity(int n);
    // cycle given as (c0 c1 ... ck): c0 -> c1 -> ... -> ck -> c0,
    // everything else fixed.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);

    int n() const { return static_cast<int>(images.size()); }
    int map(int var) const { return images[var - 1]; }
    Permutation inverse() const;
    Permutation compose(const Permutation& then) const; // this first, then `then`

    Cube apply(const Cube& c) const;

    auto operator<=>(const Permutation&) const = default;
};

enum class GroupKind { Trivial, Cyclic, Dihedral, Alternating, Symmetric };

struct GroupSpec {
    GroupKind kind = GroupKind::Trivial;
    int n = 1;

    bool is_trivial() const;
    std::string name() const;
    auto operator<=>(const GroupSpec&) const = default;
};

std::optional<GroupKind> parse_group_kind(const std::string& name);
std::string group_kind_name(GroupKind kind);

// Generating sets for the table groups. Degenerate cases collapse to
// fewer (or zero) generators; A_n is trivial for n < 3.
std::vector<Permutation> generators(const GroupSpec& g);

// Closure of {c} under the group's generators.
std::set<Cube> orbit(const Cube& c, const GroupSpec& g);

// All group elements by generator closure. Intended for small n only.
std::set<Permutation> elements(const GroupSpec& g);

} // namespace ddnf
