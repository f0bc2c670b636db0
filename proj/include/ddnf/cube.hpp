#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddnf {

// Variables are numbered 1..n; bit i-1 of a mask stands for variable i.
constexpr int kMaxVars = 24;

inline std::uint32_t full_mask(int n) {
    if (n < 0 || n > kMaxVars)
        throw std::invalid_argument("variable count out of range: " + std::to_string(n));
    return n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n));
}

// Truth assignment to variables 1..n; bit set = variable true.
struct Assignment {
    std::uint32_t values = 0;

    bool value(int var) const { return (values >> (var - 1)) & 1u; }
    auto operator<=>(const Assignment&) const = default;
};

// Lexicographic order on assignments compares x1 first, false < true.
// rank 0 is all-false, rank 2^n-1 all-true.
inline Assignment assignment_from_lex_rank(std::uint32_t rank, int n) {
    std::uint32_t v = 0;
    for (int i = 1; i <= n; ++i)
        if ((rank >> (n - i)) & 1u) v |= 1u << (i - 1);
    return Assignment{v};
}

// A conjunction of literals: support marks the variables present,
// polarity marks which of them appear negated. polarity is a subset
// of support.
struct Cube {
    std::uint32_t support = 0;
    std::uint32_t polarity = 0;

    Cube() = default;
    Cube(std::uint32_t sup, std::uint32_t pol) : support(sup), polarity(pol) {
        if ((pol & ~sup) != 0)
            throw std::invalid_argument("cube polarity not a subset of support");
    }

    static Cube from_literals(const std::vector<int>& lits) {
        std::uint32_t sup = 0, pol = 0;
        for (int lit : lits) {
            int var = lit > 0 ? lit : -lit;
            if (var < 1 || var > kMaxVars)
                throw std::invalid_argument("literal out of range: " + std::to_string(lit));
            std::uint32_t bit = 1u << (var - 1);
            if ((sup & bit) && ((pol & bit) != 0) != (lit < 0))
                throw std::invalid_argument("contradictory literals on variable " +
                                            std::to_string(var));
            sup |= bit;
            if (lit < 0) pol |= bit;
        }
        return Cube{sup, pol};
    }

    int length() const { return __builtin_popcount(support); }
    bool empty() const { return support == 0; }

    // True iff every literal holds under a. An empty cube is true.
    bool evaluate(const Assignment& a) const {
        return (a.values & support) == (support & ~polarity);
    }

    std::vector<int> literals() const {
        std::vector<int> lits;
        for (int i = 1; i <= kMaxVars; ++i) {
            std::uint32_t bit = 1u << (i - 1);
            if (support & bit) lits.push_back((polarity & bit) ? -i : i);
        }
        return lits;
    }

    std::string to_string() const;

    auto operator<=>(const Cube&) const = default;
};

inline std::string Cube::to_string() const {
    std::string s;
    for (int lit : literals()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(lit);
    }
    return s;
}

} // namespace ddnf
