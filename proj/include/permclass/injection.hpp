#pragma once

#include <string>
#include <vector>

#include "permclass/permutation.hpp"

namespace permclass {

/// Inserts one extra singleton summand immediately after the first
/// indecomposable component. Defined for decomposable 1324-avoiders;
/// preserves the inversion count and adds one component.
Permutation g(const Permutation& p);

/// Deletes the second component (a singleton) of a 1324-avoider with at
/// least three components. Exact inverse of g.
Permutation g_inverse(const Permutation& s);

/// The length-increasing injection on almost decomposable 1324-avoiders.
/// Case priority: first entry deletable, then value 1, then the
/// reverse-complement symmetric cases.
Permutation f(const Permutation& p);

/// Left inverse of f, extended to the wider domain Q_{n+1}^k of avoiders
/// with at most two components whose extremal entries stay off the corners.
Permutation h(const Permutation& s);

enum class RemainderClass { ClassA, ClassB, ClassD };

const char* remainder_class_name(RemainderClass c);

/// Entry-based class test: (a) first entry maximal or last entry 1,
/// (b) second entry maximal or last entry 2, (d) the rest. Tested in that
/// order; the caller is responsible for remainder-set membership.
RemainderClass classify_remainder(const Permutation& s);

/// The permutations of Av_{n+1}^k(1324) hit by neither g nor f, split by
/// class. in_regime marks k <= 2n-7, where the counting identities hold.
struct RemainderDecomposition {
    std::size_t n = 0;
    long k = 0;
    bool in_regime = false;
    std::vector<Permutation> class_a;
    std::vector<Permutation> class_b;
    std::vector<Permutation> class_d;

    std::size_t total() const { return class_a.size() + class_b.size() + class_d.size(); }
    std::string to_json() const;
};

RemainderDecomposition remainder_set(std::size_t n, long k);

/// The unique class-(d)-type element of Av_n^k(1324) built from a
/// decomposable avoider of length n-2 with at most n-4 inversions.
struct ClassDResult {
    Permutation value;
    bool in_regime = false;  // resulting k <= 2n-7
};

ClassDResult build_class_d(const Permutation& tau, std::size_t n);

}  // namespace permclass
