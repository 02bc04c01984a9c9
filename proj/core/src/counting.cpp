#include "fwcodes/counting.hpp"

namespace fwc {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::uint64_t checked_nonnegative(std::int64_t v, const char* what) {
    if (v < 0) throw InternalError(std::string("negative count for ") + what);
    return static_cast<std::uint64_t>(v);
}

}  // namespace

DisjointSplit disjoint_split(const CountingParams& p) {
    const int m = p.dim();
    const int size_union = set_union(p.set_a, p.set_b).size();
    DisjointSplit out;
    out.disjoint_nonempty = checked_nonnegative(pow2(m - size_union) - 1, "disjoint_nonempty");
    out.meets = checked_nonnegative(pow2(m) - pow2(m - size_union), "meets");
    return out;
}

DisjointSplit disjoint_split_bruteforce(const CountingParams& p) {
    const int m = p.dim();
    DisjointSplit out;
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        const SubsetMask x{bits, m};
        const bool avoid_both = disjoint(x, p.set_a) && disjoint(x, p.set_b);
        if (avoid_both) {
            if (!x.empty()) ++out.disjoint_nonempty;
        } else {
            ++out.meets;
        }
    }
    return out;
}

PairDisjointSplit pair_disjoint_split(const CountingParams& p) {
    const int m = p.dim();
    const int size_a = p.set_a.size();
    const int size_b = p.set_b.size();
    const int size_union = set_union(p.set_a, p.set_b).size();

    PairDisjointSplit out;
    out.both = checked_nonnegative(
        (pow2(m - size_a) - 2) * (pow2(m - size_union) - 1), "both");
    out.one = checked_nonnegative(
        2 * (pow2(m - size_a) - 1) * (pow2(m - size_b) - pow2(m - size_union)), "one");
    out.neither = checked_nonnegative(
        pow2(m) * (pow2(m - size_b) - 1) +
            pow2(m - size_a) * (1 + pow2(m - size_union) - pow2(m + 1 - size_b)),
        "neither");
    return out;
}

PairDisjointSplit pair_disjoint_split_bruteforce(const CountingParams& p) {
    const int m = p.dim();
    if (m > kMaxPairBruteforceDim) {
        throw PreconditionError("pair enumeration capped at m ≤ " +
                                std::to_string(kMaxPairBruteforceDim));
    }
    PairDisjointSplit out;
    for (std::uint32_t x = 1; x < (1u << m); ++x) {
        for (std::uint32_t y = 1; y < (1u << m); ++y) {
            if (x == y) continue;
            if (y & p.set_b.bits) continue;  // Y must avoid B
            const int hits = int((x & p.set_a.bits) == 0) + int(((x ^ y) & p.set_a.bits) == 0);
            if (hits == 2)
                ++out.both;
            else if (hits == 1)
                ++out.one;
            else
                ++out.neither;
        }
    }
    return out;
}

}  // namespace fwc
