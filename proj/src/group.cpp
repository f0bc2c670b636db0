#include "ddnf/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ddnf {

Permutation::Permutation(std::vector<int> img) : images(std::move(img)) {
    const int n = static_cast<int>(images.size());
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("permutation size out of range");
    std::vector<bool> seen(n + 1, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("images not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        img[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images.size());
    for (int i = 1; i <= n(); ++i) img[map(i) - 1] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (then.n() != n()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> img(images.size());
    for (int i = 1; i <= n(); ++i) img[i - 1] = then.map(map(i));
    return Permutation(std::move(img));
}

Cube Permutation::apply(const Cube& c) const {
    if (c.support & ~full_mask(n()))
        throw std::invalid_argument("cube support exceeds permutation size");
    std::uint32_t sup = 0, pol = 0;
    for (int i = 1; i <= n(); ++i) {
        std::uint32_t bit = 1u << (i - 1);
        if (!(c.support & bit)) continue;
        std::uint32_t image_bit = 1u << (map(i) - 1);
        sup |= image_bit;
        if (c.polarity & bit) pol |= image_bit;
    }
    return Cube{sup, pol};
}

bool GroupSpec::is_trivial() const {
    switch (kind) {
        case GroupKind::Trivial: return true;
        case GroupKind::Alternating: return n < 3;
        default: return n < 2;
    }
}

std::string GroupSpec::name() const { return group_kind_name(kind); }

std::optional<GroupKind> parse_group_kind(const std::string& name) {
    if (name == "none" || name == "trivial") return GroupKind::Trivial;
    if (name == "cyclic") return GroupKind::Cyclic;
    if (name == "dihedral") return GroupKind::Dihedral;
    if (name == "alternating") return GroupKind::Alternating;
    if (name == "symmetric") return GroupKind::Symmetric;
    return std::nullopt;
}

std::string group_kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::Trivial: return "none";
        case GroupKind::Cyclic: return "cyclic";
        case GroupKind::Dihedral: return "dihedral";
        case GroupKind::Alternating: return "alternating";
        case GroupKind::Symmetric: return "symmetric";
    }
    return "none";
}

std::vector<Permutation> generators(const GroupSpec& g) {
    const int n = g.n;
    if (n < 1) throw std::invalid_argument("group degree must be positive");
    std::vector<int> full_cycle(n);
    std::iota(full_cycle.begin(), full_cycle.end(), 1);

    switch (g.kind) {
        case GroupKind::Trivial:
            return {};
        case GroupKind::Cyclic:
            if (n == 1) return {};
            return {Permutation::from_cycle(n, full_cycle)};
        case GroupKind::Dihedral: {
            if (n == 1) return {};
            std::vector<int> reflect(n);
            for (int i = 1; i <= n; ++i) reflect[i - 1] = n + 1 - i;
            // for n = 2 the reflection equals the rotation; kept as a
            // harmless duplicate generator
            return {Permutation::from_cycle(n, full_cycle), Permutation(std::move(reflect))};
        }
        case GroupKind::Alternating: {
            if (n < 3) return {}; // A_1, A_2 are trivial
            std::vector<Permutation> gens{Permutation::from_cycle(n, {1, 2, 3})};
            Permutation even_cycle = (n % 2 == 1)
                ? Permutation::from_cycle(n, full_cycle)
                : Permutation::from_cycle(n, std::vector<int>(full_cycle.begin() + 1,
                                                              full_cycle.end()));
            if (even_cycle != gens.front()) gens.push_back(std::move(even_cycle));
            return gens;
        }
        case GroupKind::Symmetric: {
            if (n == 1) return {};
            std::vector<Permutation> gens{Permutation::from_cycle(n, {1, 2})};
            Permutation cycle = Permutation::from_cycle(n, full_cycle);
            if (cycle != gens.front()) gens.push_back(std::move(cycle));
            return gens;
        }
    }
    return {};
}

std::set<Cube> orbit(const Cube& c, const GroupSpec& g) {
    std::set<Cube> seen{c};
    std::deque<Cube> queue{c};
    auto gens = generators(g);
    while (!queue.empty()) {
        Cube cur = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            Cube img = h.apply(cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return seen;
}

std::set<Permutation> elements(const GroupSpec& g) {
    std::set<Permutation> seen{Permutation::identity(g.n)};
    std::deque<Permutation> queue(seen.begin(), seen.end());
    auto gens = generators(g);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const auto& h : gens) {
            Permutation next = cur.compose(h);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

} // namespace ddnf
