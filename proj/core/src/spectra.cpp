#include "fwcodes/spectra.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fwcodes/errors.hpp"

namespace fwc {

namespace {

std::int64_t pow2(int e) {
    if (e < 0 || e > 62) throw InternalError("pow2 exponent out of range: " + std::to_string(e));
    return std::int64_t{1} << e;
}

// Accumulates (weight, frequency) rows, merging equal weights and dropping
// zero rows. Negative values mean the caller used a formula outside its
// domain, which is a bug, not bad input.
WeightDistribution merge_rows(const std::vector<std::pair<std::int64_t, std::int64_t>>& rows) {
    WeightDistribution dist;
    for (auto [w, f] : rows) {
        if (w < 0) throw InternalError("closed form produced negative weight");
        if (f < 0) throw InternalError("closed form produced negative frequency");
        dist.add(static_cast<std::uint64_t>(w), static_cast<std::uint64_t>(f));
    }
    return dist;
}

}  // namespace

SpectrumParams::SpectrumParams(int m, int size_a, int size_b, int size_union)
    : m(m), size_a(size_a), size_b(size_b), size_union(size_union) {
    require_dim(m);
    if (size_a < 0 || size_a > m || size_b < 0 || size_b > m)
        throw PreconditionError("SpectrumParams: subset sizes must lie in [0, m]");
    if (size_union < std::max(size_a, size_b) || size_union > std::min(m, size_a + size_b))
        throw PreconditionError("SpectrumParams: |A∪B| must lie in [max(|A|,|B|), min(m, |A|+|B|)]");
}

SpectrumParams SpectrumParams::from_sets(const SubsetMask& set_a, const SubsetMask& set_b) {
    require_same_dim(set_a, set_b);
    return SpectrumParams(set_a.m, set_a.size(), set_b.size(), set_union(set_a, set_b).size());
}

std::pair<SubsetMask, SubsetMask> realize_sizes(int m, int size_a, int size_b, int size_union) {
    SpectrumParams check(m, size_a, size_b, size_union);  // validates the profile
    const int overlap = size_a + size_b - size_union;
    std::uint32_t a_bits = (size_a == 0) ? 0 : (std::uint32_t{1} << size_a) - 1;
    std::uint32_t b_bits = 0;
    for (int i = 0; i < size_b; ++i) b_bits |= std::uint32_t{1} << (size_a - overlap + i);
    return {SubsetMask{a_bits, m}, SubsetMask{b_bits, m}};
}

WeightDistribution closed_form_l1(const SpectrumParams& params) {
    const int m = params.m, a = params.size_a, b = params.size_b, c = params.size_union;
    if (b < 1 || b > m - 1)
        throw PreconditionError("closed_form_l1: requires 0 < |B| < m (got |B|=" +
                                std::to_string(b) + ", m=" + std::to_string(m) + ")");
    return merge_rows({
        {0, pow2(m - a)},
        {pow2(m + a), pow2(m - a) * (pow2(m - c) - 1)},
        {pow2(a) * (pow2(m) - pow2(b)), pow2(2 * m) + pow2(m - a) * (pow2(m - c) - pow2(m + 1 - b))},
        {pow2(m + a) - pow2(a + b - 1), pow2(m - a + 1) * (pow2(m - b) - pow2(m - c))},
    });
}

WeightDistribution closed_form_l1_u_only(int m, int size_b) {
    require_dim(m);
    const int b = size_b;
    if (b < 1 || b > m - 1)
        throw PreconditionError("closed_form_l1_u_only: requires 0 < |B| < m (got |B|=" +
                                std::to_string(b) + ", m=" + std::to_string(m) + ")");
    return merge_rows({
        {0, pow2(m)},
        {pow2(m), pow2(m) * (pow2(m - b) - 1)},
        {pow2(m) - pow2(b), pow2(2 * m) - pow2(2 * m - b)},
    });
}

WeightDistribution closed_form_l1_full(int m, int size_b) {
    require_dim(m);
    const int b = size_b;
    if (b < 1 || b > m - 1)
        throw PreconditionError("closed_form_l1_full: requires 0 < |B| < m (got |B|=" +
                                std::to_string(b) + ", m=" + std::to_string(m) + ")");
    return merge_rows({
        {0, 1},
        {pow2(m) * (pow2(m) - pow2(b)), pow2(2 * m) - pow2(m + 1 - b) + 1},
        {pow2(2 * m) - pow2(m - 1 + b), pow2(m + 1 - b) - 2},
    });
}

WeightDistribution closed_form_l2(const SpectrumParams& params) {
    const int m = params.m, a = params.size_a, b = params.size_b, c = params.size_union;
    if (a < 1 || a > m - 1 || b < 1 || b > m - 1)
        throw PreconditionError("closed_form_l2: requires 0 < |A| < m and 0 < |B| < m (got |A|=" +
                                std::to_string(a) + ", |B|=" + std::to_string(b) +
                                ", m=" + std::to_string(m) + ")");
    // Row two counts the messages with zero F_2-part whose u-part avoids A,
    // so its frequency is 2^{m-|A|}-1; the weight-w0 row absorbs the rest.
    const std::int64_t w0 = (pow2(m) - pow2(a)) * (pow2(m) - pow2(b));
    return merge_rows({
        {0, 1},
        {pow2(m) * (pow2(m) - pow2(b)), pow2(m - a) - 1},
        {w0 + pow2(b - 1) * (pow2(m) - pow2(a + 1)), 2 * (pow2(m - c) - 1)},
        {w0 + pow2(b - 1) * (pow2(m) - pow2(a)), 2 * (pow2(m - b) - pow2(m - c))},
        {w0 - pow2(a + b), (pow2(m - a) - 2) * (pow2(m - c) - 1)},
        {w0 - pow2(a + b - 1), 2 * (pow2(m - a) - 1) * (pow2(m - b) - pow2(m - c))},
        {w0, pow2(2 * m) + pow2(m - a) * (pow2(m - c) - pow2(m + 1 - b))},
    });
}

WeightDistribution closed_form_l2_plain(int m, int size_a) {
    require_dim(m);
    const int a = size_a;
    if (a < 1 || a > m - 1)
        throw PreconditionError("closed_form_l2_plain: requires 0 < |A| < m (got |A|=" +
                                std::to_string(a) + ", m=" + std::to_string(m) + ")");
    const std::int64_t big = pow2(m) - pow2(m - a);  // codewords per heavy class
    const std::int64_t small = pow2(m - a) - 1;
    return merge_rows({
        {0, 1},
        {pow2(m), small * small},
        {pow2(m) - pow2(a), big * big},
        {pow2(m - 1), 2 * small},
        {pow2(m - 1) - pow2(a - 1), 2 * big},
        {pow2(m) - pow2(a - 1), 2 * big * small},
    });
}

WeightDistribution closed_form_l2_plain_corank1(int m) {
    require_dim(m);
    if (m < 2)
        throw PreconditionError("closed_form_l2_plain_corank1: requires m >= 2 (got m=" +
                                std::to_string(m) + ")");
    return merge_rows({
        {0, 1},
        {pow2(m), 1},
        {pow2(m - 1), pow2(2 * m) - pow2(m + 2) + 6},
        {pow2(m - 2), pow2(m + 1) - 4},
        {pow2(m) - pow2(m - 2), pow2(m + 1) - 4},
    });
}

std::size_t lee_weight_count(const SpectrumParams& params, Family family) {
    switch (family) {
        case Family::L1: return closed_form_l1(params).distinct_nonzero_weights();
        case Family::L2: return closed_form_l2(params).distinct_nonzero_weights();
        case Family::L2Plain:
            throw PreconditionError("lee_weight_count: use the plain-L2 closed forms directly");
    }
    throw InternalError("unknown family");
}

}  // namespace fwc
