#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>

#include "fwcodes/codes.hpp"
#include "fwcodes/spectra.hpp"
#include "fwcodes/subsets.hpp"

using namespace fwc;

namespace {

WeightDistribution dist_of(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> rows) {
    WeightDistribution d;
    for (auto [w, f] : rows) d.add(w, f);
    return d;
}

}  // namespace

TEST_CASE("size parameter validation") {
    CHECK_NOTHROW(SpectrumParams(4, 2, 3, 4));
    CHECK_THROWS_AS(SpectrumParams(4, 2, 3, 2), PreconditionError);   // union < max
    CHECK_THROWS_AS(SpectrumParams(4, 2, 3, 6), PreconditionError);   // union > a+b
    CHECK_THROWS_AS(SpectrumParams(4, 5, 1, 5), PreconditionError);   // a > m
    CHECK_THROWS_AS(SpectrumParams(0, 0, 0, 0), PreconditionError);

    const auto params = SpectrumParams::from_sets(subset_of(4, {1, 2}), subset_of(4, {2, 3}));
    CHECK(params.size_a == 2);
    CHECK(params.size_b == 2);
    CHECK(params.size_union == 3);
}

TEST_CASE("size profiles are realizable") {
    for (int m = 1; m <= 6; ++m)
        for (int a = 0; a <= m; ++a)
            for (int b = 0; b <= m; ++b)
                for (int c = std::max(a, b); c <= std::min(m, a + b); ++c) {
                    const auto [set_a, set_b] = realize_sizes(m, a, b, c);
                    CHECK(set_a.size() == a);
                    CHECK(set_b.size() == b);
                    CHECK(set_union(set_a, set_b).size() == c);
                }
}

TEST_CASE("first family closed form") {
    CHECK(closed_form_l1(SpectrumParams(2, 1, 1, 1)) == dist_of({{0, 2}, {4, 12}, {8, 2}}));
    CHECK(closed_form_l1(SpectrumParams(2, 2, 1, 2)) == dist_of({{0, 1}, {8, 13}, {12, 2}}));
    CHECK_THROWS_AS(closed_form_l1(SpectrumParams(3, 1, 0, 1)), PreconditionError);
    CHECK_THROWS_AS(closed_form_l1(SpectrumParams(3, 1, 3, 3)), PreconditionError);
}

TEST_CASE("pure-u specialization agrees with the general form") {
    CHECK(closed_form_l1_u_only(2, 1) == dist_of({{0, 4}, {2, 8}, {4, 4}}));
    for (int m = 2; m <= 6; ++m)
        for (int b = 1; b <= m - 1; ++b)
            CHECK(closed_form_l1_u_only(m, b) == closed_form_l1(SpectrumParams(m, 0, b, b)));
    CHECK_THROWS_AS(closed_form_l1_u_only(3, 0), PreconditionError);
}

TEST_CASE("full-complex specialization agrees with the general form") {
    CHECK(closed_form_l1_full(2, 1) == dist_of({{0, 1}, {8, 13}, {12, 2}}));
    for (int m = 2; m <= 6; ++m)
        for (int b = 1; b <= m - 1; ++b)
            CHECK(closed_form_l1_full(m, b) == closed_form_l1(SpectrumParams(m, m, b, m)));
}

TEST_CASE("second family closed form") {
    CHECK(closed_form_l2(SpectrumParams(3, 1, 2, 3)) ==
          dist_of({{0, 1}, {20, 6}, {24, 52}, {32, 3}, {36, 2}}));
    CHECK(closed_form_l2(SpectrumParams(3, 2, 2, 2)) == dist_of({{0, 1}, {16, 62}, {32, 1}}));
    CHECK_THROWS_AS(closed_form_l2(SpectrumParams(3, 0, 2, 2)), PreconditionError);
    CHECK_THROWS_AS(closed_form_l2(SpectrumParams(3, 3, 2, 3)), PreconditionError);
}

TEST_CASE("plain second family closed form") {
    CHECK(closed_form_l2_plain(3, 1) ==
          dist_of({{0, 1}, {3, 8}, {4, 6}, {6, 16}, {7, 24}, {8, 9}}));
    CHECK(closed_form_l2_plain(3, 2) == dist_of({{0, 1}, {2, 12}, {4, 38}, {6, 12}, {8, 1}}));
    CHECK_THROWS_AS(closed_form_l2_plain(3, 0), PreconditionError);
    CHECK_THROWS_AS(closed_form_l2_plain(3, 3), PreconditionError);
}

TEST_CASE("corank-one specialization") {
    CHECK(closed_form_l2_plain_corank1(3) == dist_of({{0, 1}, {8, 1}, {4, 38}, {2, 12}, {6, 12}}));
    for (int m = 2; m <= 8; ++m)
        CHECK(closed_form_l2_plain_corank1(m) == closed_form_l2_plain(m, m - 1));
    for (int m = 3; m <= 8; ++m)
        CHECK(closed_form_l2_plain_corank1(m).distinct_nonzero_weights() == 4);
    CHECK_THROWS_AS(closed_form_l2_plain_corank1(1), PreconditionError);
}

TEST_CASE("distinct nonzero weight counts") {
    CHECK(lee_weight_count(SpectrumParams(2, 1, 1, 1), Family::L1) == 2);
    // Symbolic rows can collide: at A=B the second family's seven rows merge
    // down to two distinct nonzero weights.
    CHECK(lee_weight_count(SpectrumParams(3, 2, 2, 2), Family::L2) == 2);
    CHECK(lee_weight_count(SpectrumParams(4, 1, 3, 4), Family::L2) == 4);
    CHECK_THROWS_AS(lee_weight_count(SpectrumParams(3, 1, 1, 1), Family::L2Plain),
                    PreconditionError);

    // Two sufficient conditions for a two-weight first-family code:
    // A ∪ B = [m] (c == m) or A ⊆ B (c == b).
    for (int m = 2; m <= 5; ++m)
        for (int a = 0; a <= m; ++a)
            for (int b = 1; b <= m - 1; ++b)
                for (int c = std::max(a, b); c <= std::min(m, a + b); ++c)
                    if (c == m || c == b)
                        CHECK(lee_weight_count(SpectrumParams(m, a, b, c), Family::L1) == 2);
}

TEST_CASE("totals and zero rows") {
    for (int m = 2; m <= 5; ++m) {
        for (int a = 0; a <= m; ++a)
            for (int b = 1; b <= m - 1; ++b)
                for (int c = std::max(a, b); c <= std::min(m, a + b); ++c) {
                    const auto d = closed_form_l1(SpectrumParams(m, a, b, c));
                    CHECK(d.total() == std::uint64_t{1} << (2 * m));
                    CHECK(d.frequency(0) > 0);
                }
        for (int a = 1; a <= m - 1; ++a) {
            for (int b = 1; b <= m - 1; ++b)
                for (int c = std::max(a, b); c <= std::min(m, a + b); ++c) {
                    const auto d = closed_form_l2(SpectrumParams(m, a, b, c));
                    CHECK(d.total() == std::uint64_t{1} << (2 * m));
                    CHECK(d.frequency(0) > 0);
                }
            CHECK(closed_form_l2_plain(m, a).total() == std::uint64_t{1} << (2 * m));
        }
    }
}

TEST_CASE("closed forms match enumeration on concrete sets") {
    // One point per family beyond the acceptance sweep, through realize_sizes.
    const auto [a1, b1] = realize_sizes(4, 2, 2, 3);
    CHECK(closed_form_l1(SpectrumParams(4, 2, 2, 3)) ==
          lee_spectrum_bruteforce(make_l1(SimplicialComplex::generated_by(a1),
                                          SimplicialComplex::generated_by(b1))));
    const auto [a2, b2] = realize_sizes(4, 1, 2, 3);
    CHECK(closed_form_l2(SpectrumParams(4, 1, 2, 3)) ==
          lee_spectrum_bruteforce(make_l2(SimplicialComplex::generated_by(a2),
                                          SimplicialComplex::generated_by(b2))));
    const auto [a3, b3] = realize_sizes(4, 3, 0, 3);
    CHECK(closed_form_l2_plain(4, 3) ==
          lee_spectrum_bruteforce(make_l2_plain(SimplicialComplex::generated_by(a3))));
}
