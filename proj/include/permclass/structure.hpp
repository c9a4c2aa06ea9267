#pragma once

#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// The four boundary deletions used by almost-decomposability:
/// value 1, value n, the first entry, the last entry.
enum class BoundaryDeletion { DelMinValue, DelMaxValue, DelFirstEntry, DelLastEntry };

const char* boundary_deletion_name(BoundaryDeletion d);

/// Applies the deletion named by `d` to `p`.
Permutation apply_boundary_deletion(const Permutation& p, BoundaryDeletion d);

struct StructureClass {
    enum class Kind { Decomposable, AlmostDecomposable, Neither };
    Kind kind;
    std::vector<Permutation> comps;           // for Decomposable
    std::set<BoundaryDeletion> witnesses;     // for AlmostDecomposable

    bool decomposable() const { return kind == Kind::Decomposable; }
    bool almost_decomposable() const { return kind == Kind::AlmostDecomposable; }
    bool neither() const { return kind == Kind::Neither; }
};

bool is_decomposable(const Permutation& p);

/// Canonical decomposition of a decomposable 1324-avoider per the sum form
/// head + singletons + tail: head is the first indecomposable component, tail
/// the last, and the middle_count components in between are all singletons.
struct SumForm1324 {
    Permutation head;
    std::size_t middle_count;
    Permutation tail;
};

SumForm1324 sum_form_1324(const Permutation& p);

/// Full classification; all four deletions are always computed so the
/// witness set is complete.
StructureClass classify_boundary(const Permutation& p);

/// Index sets (1-based) of the northwestern and southeastern corner regions.
/// Only defined when pi_1 < pi_n and pi^{-1}_1 < pi^{-1}_n.
struct CornerRegions {
    std::set<std::size_t> northwest;
    std::set<std::size_t> southeast;
};

CornerRegions corner_regions(const Permutation& p);

/// Southern/eastern/central index sets relative to a northwestern anchor.
struct SideRegions {
    std::set<std::size_t> southern;
    std::set<std::size_t> eastern;
    std::set<std::size_t> central;
};

SideRegions side_regions(const Permutation& p, std::size_t anchor);

/// Exhaustive verification that every indecomposable 1324-avoider of length n
/// with at most 2n-7 inversions is almost decomposable, plus the census of
/// boundary-case (k = 2n-6) permutations that are Neither.
struct RemovePointReport {
    std::size_t n = 0;
    long k_max = 0;  // 2n-7
    std::vector<Permutation> violations;
    std::vector<Permutation> boundary_neither;  // Neither at k = 2n-6

    std::string to_json() const;
};

RemovePointReport verify_almost_decomposability(std::size_t n);

}  // namespace permclass
