#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permclass/permutation.hpp"

namespace permclass {

using BigInt = boost::multiprecision::cpp_int;

/// Worker count used by the sharded enumerations. Reads PERMCLASS_THREADS,
/// falling back to the available hardware parallelism. Results never depend
/// on this value.
unsigned worker_count();

/// Visits every `pattern`-avoiding permutation of length n with at most
/// `inv_budget` inversions (all of them when the budget is absent), in
/// lexicographic order of the one-line notation. Returns the number visited.
/// The sink may be empty when only the count is wanted.
BigInt enumerate_avoiders(const Permutation& pattern, std::size_t n,
                          std::optional<long> inv_budget,
                          const std::function<void(const Permutation&, long)>& sink = {});

enum class Engine { Brute, Pruned, Closed };

const char* engine_name(Engine e);
Engine parse_engine(const std::string& name);

/// Row of counts av_n^k(pattern) for k = 0..k_max.
/// Brute iterates all n! permutations with the generic containment test;
/// pruned runs the budgeted incremental search. The two agree everywhere,
/// and Closed (pattern 1324 only, k <= 2n-7) agrees with both in-regime.
std::vector<BigInt> count_by_inversions(const Permutation& pattern, std::size_t n,
                                        long k_max, Engine engine);

struct CountTable {
    Permutation pattern;
    Engine engine = Engine::Pruned;
    std::optional<long> inv_budget;  // per-row cap; absent = full rows
    std::map<std::pair<std::size_t, long>, BigInt> entries;

    const BigInt* find(std::size_t n, long k) const;

    std::string to_csv() const;
    std::string to_json() const;
    static CountTable from_csv(const std::string& text);
};

/// Rows n = 1..n_max; each row spans k = 0..min(budget, C(n,2)).
CountTable build_table(const Permutation& pattern, std::size_t n_max,
                       std::optional<long> inv_budget, Engine engine);

/// Number of all n-permutations with k inversions (Mahonian numbers),
/// via the q-factorial dynamic program.
BigInt mahonian(std::size_t n, long k);

struct MonotonicityReport {
    std::vector<std::pair<std::size_t, long>> violations;  // av_{n+1}^k < av_n^k
    // in-regime (k <= 2n-7) spots where the empirical difference != [x^k]R_n
    std::vector<std::pair<std::size_t, long>> closed_form_mismatches;
    bool clean() const { return violations.empty() && closed_form_mismatches.empty(); }
};

MonotonicityReport check_monotonicity(const CountTable& table);

/// One evaluation of the repeated-difference expression b_{r,n}, with the
/// eight table entries it combines recorded for inspection.
struct DifferenceReport {
    long r = 0;
    std::size_t n = 0;
    bool complete = false;                 // all entries were present
    BigInt b_value;
    std::map<std::pair<std::size_t, long>, BigInt> comps;
    std::vector<std::pair<std::size_t, long>> missing;
};

DifferenceReport third_difference(const CountTable& table, long r, std::size_t n);

/// Starting value (at n = 10+r) of the inner second difference of b_{r,n}.
/// Empty when the required entries are missing.
std::optional<BigInt> second_difference_start(const CountTable& table, long r);

struct ShapeReport {
    bool unimodal = false;
    bool log_concave = false;
    bool tail_log_concave = false;   // after dropping the first n-1 entries
    std::vector<std::size_t> argmax_positions;  // 0-based k values attaining the max
};

/// Shape diagnostics for a complete row k = 0..C(n,2).
ShapeReport shape_checks(const std::vector<BigInt>& row, std::size_t n);

}  // namespace permclass
