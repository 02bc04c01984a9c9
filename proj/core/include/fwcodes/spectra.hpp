#ifndef FWCODES_SPECTRA_HPP
#define FWCODES_SPECTRA_HPP

#include <cstddef>
#include <utility>

#include "fwcodes/codes.hpp"
#include "fwcodes/subsets.hpp"

namespace fwc {

/// Size data of a pair (A, B) of subsets of {1..m}. The closed-form Lee
/// distributions below depend on the pair only through these four numbers.
struct SpectrumParams {
    int m;
    int size_a;
    int size_b;
    int size_union;

    SpectrumParams(int m, int size_a, int size_b, int size_union);
    static SpectrumParams from_sets(const SubsetMask& set_a, const SubsetMask& set_b);
};

/// A canonical pair (A, B) with the given sizes: A = {1..a} and B overlaps
/// it in exactly a+b−c trailing elements. Used to sweep size profiles.
std::pair<SubsetMask, SubsetMask> realize_sizes(int m, int size_a, int size_b, int size_union);

// Message-indexed Lee weight distributions (frequencies total 2^{2m}) of the
// codes with defining set generated by the single-maximal complexes Δ_A, Δ_B.
// Equal weights are merged and zero frequencies dropped.

/// L = Δ_A + u·Δ_Bᶜ with 0 < |B| < m (any |A|).
WeightDistribution closed_form_l1(const SpectrumParams& params);

/// Specialization |A| = 0, i.e. L = {0} + u·Δ_Bᶜ, with 0 < |B| < m.
WeightDistribution closed_form_l1_u_only(int m, int size_b);

/// Specialization |A| = m, i.e. L = F_2^m + u·Δ_Bᶜ, with 0 < |B| < m.
WeightDistribution closed_form_l1_full(int m, int size_b);

/// L = Δ_Aᶜ + u·Δ_Bᶜ with 0 < |A| < m and 0 < |B| < m.
WeightDistribution closed_form_l2(const SpectrumParams& params);

/// L = Δ_Aᶜ (u-part pinned to zero) with 0 < |A| < m.
WeightDistribution closed_form_l2_plain(int m, int size_a);

/// The |A| = m−1 case of the plain L2 family, rows pre-merged (two weights
/// collide there). Requires m >= 2.
WeightDistribution closed_form_l2_plain_corank1(int m);

/// Number of distinct nonzero Lee weights of the family's code for these
/// sizes, via the applicable closed form. Families L1 and L2 only.
std::size_t lee_weight_count(const SpectrumParams& params, Family family);

}  // namespace fwc

#endif
