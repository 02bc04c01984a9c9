#ifndef FWCODES_COUNTING_HPP
#define FWCODES_COUNTING_HPP

#include <cstdint>

#include "fwcodes/subsets.hpp"

namespace fwc {

// Brute-force pair counting walks 4^m ordered pairs.
inline constexpr int kMaxPairBruteforceDim = 12;

/// A pair of reference subsets A, B of the same [m]. All counts below are
/// functions of (m, A, B) only.
struct CountingParams {
    SubsetMask set_a;
    SubsetMask set_b;

    CountingParams(const SubsetMask& a, const SubsetMask& b) : set_a(a), set_b(b) {
        require_same_dim(a, b);
    }
    int dim() const { return set_a.m; }
};

/// `disjoint_nonempty` counts nonempty X ⊆ [m] with X ∩ A = X ∩ B = ∅;
/// `meets` counts X with X ∩ (A ∪ B) ≠ ∅. (∅ falls in neither bucket.)
struct DisjointSplit {
    std::uint64_t disjoint_nonempty = 0;
    std::uint64_t meets = 0;

    friend bool operator==(const DisjointSplit&, const DisjointSplit&) = default;
};

/// Closed forms: 2^{m−|A∪B|}−1 and 2^m−2^{m−|A∪B|}.
DisjointSplit disjoint_split(const CountingParams& p);

/// Same counts by direct enumeration of all X.
DisjointSplit disjoint_split_bruteforce(const CountingParams& p);

/// Ordered pairs (X, Y) with X, Y nonempty, X ≠ Y and Y ∩ B = ∅, classified
/// by how many of X and X ⊕ Y are disjoint from A (both / exactly one /
/// neither).
struct PairDisjointSplit {
    std::uint64_t both = 0;
    std::uint64_t one = 0;
    std::uint64_t neither = 0;

    std::uint64_t total() const { return both + one + neither; }
    friend bool operator==(const PairDisjointSplit&, const PairDisjointSplit&) = default;
};

/// Closed forms:
///   both    = (2^{m−|A|}−2)(2^{m−|A∪B|}−1)
///   one     = 2(2^{m−|A|}−1)(2^{m−|B|}−2^{m−|A∪B|})
///   neither = 2^m(2^{m−|B|}−1) + 2^{m−|A|}(1 + 2^{m−|A∪B|} − 2^{m+1−|B|})
/// Their total is (2^{m−|B|}−1)(2^m−2).
PairDisjointSplit pair_disjoint_split(const CountingParams& p);

/// Same counts by direct enumeration of all ordered pairs (m ≤ 12).
PairDisjointSplit pair_disjoint_split_bruteforce(const CountingParams& p);

}  // namespace fwc

#endif
