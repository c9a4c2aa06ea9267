#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace permclass {

/// A permutation in one-line notation. Immutable after construction.
/// Entries are the values pi_1 ... pi_n; all positions and values in the
/// public interface are 1-based. The empty permutation (n = 0) is a valid
/// value and acts as the identity of the direct sum.
class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a rearrangement of 1..n.
    /// Throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> values);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Value at 1-based position i.
    int at(std::size_t i) const {
        if (i < 1 || i > entries_.size())
            throw std::out_of_range("Permutation::at: position out of range");
        return entries_[i - 1];
    }

    /// 1-based position of value v.
    std::size_t position_of(int v) const {
        if (v < 1 || static_cast<std::size_t>(v) > entries_.size())
            throw std::out_of_range("Permutation::position_of: value out of range");
        return positions_[static_cast<std::size_t>(v) - 1];
    }

    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> entries_;
    std::vector<std::size_t> positions_;  // positions_[v-1] = 1-based index of value v
};

/// Inversion table b_1 ... b_n with b_i = |{j > i : pi_j < pi_i}|.
struct InversionTable {
    std::vector<int> values;

    bool weakly_decreasing() const;
    /// The nonzero prefix, read as an integer partition.
    std::vector<int> partition() const;
};

Permutation make_permutation(std::vector<int> values);
Permutation identity(std::size_t n);

Permutation inverse(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

long inversion_count(const Permutation& p);

/// Left- and right-inversions of 1-based index i:
/// left = |{j < i : pi_j > pi_i}|, right = |{j > i : pi_j < pi_i}|.
std::pair<long, long> inversions_at(const Permutation& p, std::size_t i);

InversionTable inversion_table(const Permutation& p);

/// Generic pattern containment by backtracking over index tuples.
bool contains(const Permutation& p, const Permutation& pattern);
inline bool avoids(const Permutation& p, const Permutation& pattern) {
    return !contains(p, pattern);
}

/// Specialized O(n^2) test for the pattern 1324, via prefix-minimum /
/// suffix-maximum precomputation. Agrees with the generic routine.
bool contains_1324(const Permutation& p);

Permutation direct_sum(std::span<const Permutation> parts);
Permutation direct_sum(std::initializer_list<Permutation> parts);

/// Maximal decomposition into indecomposable components.
std::vector<Permutation> components(const Permutation& p);
std::size_t component_count(const Permutation& p);

/// Deletes the given values; the survivors are renumbered order-isomorphically.
Permutation delete_values(const Permutation& p, const std::set<int>& values);

/// Inserts `value` at 1-based `position`; existing entries >= value shift up.
/// Inverse of single-value deletion: delete_values(insert(p,pos,v),{v}) == p.
Permutation insert(const Permutation& p, std::size_t position, int value);

/// Compact digit string for n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& p);
/// Parses both formats accepted by to_string.
Permutation parse_permutation(const std::string& text);

}  // namespace permclass
