#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ddnf/cube.hpp"
#include "ddnf/group.hpp"

namespace ddnf {

// Raised when an exhaustive check would exceed the 2^n enumeration cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TautologyCheck {
    bool is_tautology = false;
    std::optional<Assignment> first_uncovered; // lex-least, present iff not a tautology
};

struct DistinctSupportCheck {
    bool distinct = false;
    std::optional<std::uint32_t> first_duplicate_support;
};

struct VerificationReport {
    bool is_tautology = false;
    bool distinct_supports = false;
    int min_length = 0;
    int max_length = 0;
    bool length_window_ok = false;
    std::optional<bool> invariant_under_group;
    std::optional<Assignment> first_uncovered_assignment;
    std::optional<std::uint32_t> first_duplicate_support;

    bool all_ok() const {
        return is_tautology && distinct_supports && length_window_ok &&
               invariant_under_group.value_or(true);
    }
};

// A duplicate-free set of nonempty cubes over variables 1..n, kept in
// canonical order (support, then polarity, as integers).
class Dnf {
public:
    Dnf() = default;
    Dnf(int n, std::vector<Cube> cubes);

    int n() const { return n_; }
    const std::vector<Cube>& cubes() const { return cubes_; }
    bool contains(const Cube& c) const;
    std::size_t size() const { return cubes_.size(); }

    bool operator==(const Dnf&) const = default;

private:
    int n_ = 0;
    std::vector<Cube> cubes_;
};

// Exhaustive tautology check over all 2^n assignments. Throws
// CapacityError for n > kMaxVars.
TautologyCheck is_tautology(const Dnf& d);

DistinctSupportCheck has_distinct_supports(const Dnf& d);

// Image of d under a permutation (cube-wise).
Dnf apply(const Permutation& g, const Dnf& d);

// True iff every generator maps d's cube set onto itself.
bool is_invariant(const Dnf& d, const GroupSpec& g);

// Full report: tautology, distinct supports, length window [k,u],
// and invariance when a group is given.
VerificationReport verify(const Dnf& d, int k, int u,
                          const std::optional<GroupSpec>& group = std::nullopt);

// Textual format: header "p dnf <n> <cubes>", one cube per line as
// signed integers, '#' comments, blank lines ignored.
Dnf read_dnf(std::istream& in);
Dnf read_dnf_file(const std::string& path);
void write_dnf(std::ostream& out, const Dnf& d);
std::string dnf_to_string(const Dnf& d);

} // namespace ddnf
