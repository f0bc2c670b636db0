#include "ddnf/dnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ddnf {

Dnf::Dnf(int n, std::vector<Cube> cubes) : n_(n), cubes_(std::move(cubes)) {
    if (n < 0 || n > kMaxVars)
        throw std::invalid_argument("DNF variable count out of range");
    const std::uint32_t mask = full_mask(n);
    for (const Cube& c : cubes_) {
        if (c.empty()) throw std::invalid_argument("DNF may not contain an empty cube");
        if (c.support & ~mask)
            throw std::invalid_argument("cube mentions a variable beyond n");
    }
    std::sort(cubes_.begin(), cubes_.end());
    cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
}

bool Dnf::contains(const Cube& c) const {
    return std::binary_search(cubes_.begin(), cubes_.end(), c);
}

TautologyCheck is_tautology(const Dnf& d) {
    const int n = d.n();
    if (n > kMaxVars)
        throw CapacityError("exhaustive tautology check capped at n = " +
                            std::to_string(kMaxVars));
    const std::uint64_t count = 1ull << n;
    std::vector<bool> covered(count, false);
    const std::uint32_t mask = full_mask(n);
    for (const Cube& c : d.cubes()) {
        const std::uint32_t base = c.support & ~c.polarity;
        const std::uint32_t free = mask & ~c.support;
        std::uint32_t sub = free;
        while (true) {
            covered[base | sub] = true;
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    for (std::uint64_t rank = 0; rank < count; ++rank) {
        Assignment a = assignment_from_lex_rank(static_cast<std::uint32_t>(rank), n);
        if (!covered[a.values]) return {false, a};
    }
    return {true, std::nullopt};
}

DistinctSupportCheck has_distinct_supports(const Dnf& d) {
    // cubes are canonically sorted, so equal supports are adjacent
    const auto& cubes = d.cubes();
    for (std::size_t i = 1; i < cubes.size(); ++i)
        if (cubes[i].support == cubes[i - 1].support)
            return {false, cubes[i].support};
    return {true, std::nullopt};
}

Dnf apply(const Permutation& g, const Dnf& d) {
    std::vector<Cube> images;
    images.reserve(d.size());
    for (const Cube& c : d.cubes()) images.push_back(g.apply(c));
    return Dnf(d.n(), std::move(images));
}

bool is_invariant(const Dnf& d, const GroupSpec& g) {
    if (g.n != d.n() && !g.is_trivial())
        throw std::invalid_argument("group degree does not match DNF");
    for (const Permutation& h : generators(g))
        if (apply(h, d) != d) return false;
    return true;
}

VerificationReport verify(const Dnf& d, int k, int u,
                          const std::optional<GroupSpec>& group) {
    if (k < 0 || k > u || u > d.n())
        throw std::invalid_argument("verify requires 0 <= k <= u <= n");
    VerificationReport report;

    TautologyCheck taut = is_tautology(d);
    report.is_tautology = taut.is_tautology;
    report.first_uncovered_assignment = taut.first_uncovered;

    DistinctSupportCheck distinct = has_distinct_supports(d);
    report.distinct_supports = distinct.distinct;
    report.first_duplicate_support = distinct.first_duplicate_support;

    if (d.size() > 0) {
        int lo = kMaxVars + 1, hi = 0;
        for (const Cube& c : d.cubes()) {
            lo = std::min(lo, c.length());
            hi = std::max(hi, c.length());
        }
        report.min_length = lo;
        report.max_length = hi;
        report.length_window_ok = (lo >= k && hi <= u);
    }

    if (group && !group->is_trivial())
        report.invariant_under_group = is_invariant(d, *group);

    return report;
}

Dnf read_dnf(std::istream& in) {
    std::string line;
    int n = -1;
    long declared = -1;
    std::vector<Cube> cubes;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared) || fmt != "dnf")
                throw std::invalid_argument("malformed DNF header: " + line);
            continue;
        }
        std::vector<int> lits;
        lits.push_back(std::stoi(first));
        int lit;
        while (ls >> lit) lits.push_back(lit);
        cubes.push_back(Cube::from_literals(lits));
    }
    if (n < 0) throw std::invalid_argument("missing 'p dnf <n> <cubes>' header");
    if (declared >= 0 && declared != static_cast<long>(cubes.size()))
        throw std::invalid_argument("DNF header cube count does not match body");
    return Dnf(n, std::move(cubes));
}

Dnf read_dnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open DNF file: " + path);
    return read_dnf(in);
}

void write_dnf(std::ostream& out, const Dnf& d) {
    out << "p dnf " << d.n() << ' ' << d.size() << '\n';
    for (const Cube& c : d.cubes()) out << c.to_string() << '\n';
}

std::string dnf_to_string(const Dnf& d) {
    std::ostringstream out;
    write_dnf(out, d);
    return out.str();
}

} // namespace ddnf
