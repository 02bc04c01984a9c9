#ifndef FWCODES_SUBSETS_HPP
#define FWCODES_SUBSETS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fwcodes/errors.hpp"

namespace fwc {

// Largest supported ambient dimension. Masks fit one 32-bit word and
// quadratic enumerations over 2^(2m) stay addressable.
inline constexpr int kMaxAmbientDim = 30;

/// A subset of [m] = {1,...,m}, identified with a vector of F_2^m via its
/// support. Element i corresponds to bit i-1.
struct SubsetMask {
    std::uint32_t bits = 0;
    int m = 0;

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool contains(int element) const { return (bits >> (element - 1)) & 1u; }
    bool subset_of(const SubsetMask& other) const { return (bits & ~other.bits) == 0; }

    friend bool operator==(const SubsetMask&, const SubsetMask&) = default;
};

void require_dim(int m);
void require_same_dim(const SubsetMask& x, const SubsetMask& y);

SubsetMask empty_set(int m);
SubsetMask full_set(int m);
SubsetMask subset_from_bits(int m, std::uint32_t bits);
SubsetMask subset_of(int m, const std::vector<int>& elements);  // 1-based

/// Indicator that X and A are disjoint (1 iff X ∩ A = ∅).
inline bool disjoint(const SubsetMask& x, const SubsetMask& a) {
    require_same_dim(x, a);
    return (x.bits & a.bits) == 0;
}

/// Symmetric difference (A ∪ B) \ (A ∩ B); the support of the F_2 sum of the
/// two corresponding vectors.
inline SubsetMask sym_diff(const SubsetMask& x, const SubsetMask& y) {
    require_same_dim(x, y);
    return SubsetMask{x.bits ^ y.bits, x.m};
}

inline SubsetMask set_union(const SubsetMask& x, const SubsetMask& y) {
    require_same_dim(x, y);
    return SubsetMask{x.bits | y.bits, x.m};
}

inline SubsetMask set_intersection(const SubsetMask& x, const SubsetMask& y) {
    require_same_dim(x, y);
    return SubsetMask{x.bits & y.bits, x.m};
}

/// Parity of |X ∩ Y|, i.e. the F_2 inner product of the two vectors.
inline bool dot_parity(const SubsetMask& x, const SubsetMask& y) {
    require_same_dim(x, y);
    return std::popcount(x.bits & y.bits) & 1;
}

/// All 2^m subsets of [m] in increasing order of the bit pattern. This is the
/// canonical ordering used whenever subsets are serialized into a coordinate
/// sequence.
std::vector<SubsetMask> enumerate_subsets(int m);

/// Text form "{1,3}"; "{}" for the empty set.
std::string to_string(const SubsetMask& x);

/// Accepts "{1,3}", "1,3", "{}" and "".
SubsetMask parse_subset(int m, std::string_view text);

}  // namespace fwc

#endif
