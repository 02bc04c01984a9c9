#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "fwcodes/subsets.hpp"

using namespace fwc;

TEST_CASE("disjointness indicator") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& a : enumerate_subsets(m)) CHECK(disjoint(empty_set(m), a));
    CHECK_FALSE(disjoint(subset_of(2, {1}), subset_of(2, {1, 2})));
    CHECK(disjoint(subset_of(3, {1}), subset_of(3, {2, 3})));

    // Number of nonempty X disjoint from a singleton in m=3.
    int hits = 0;
    for (const auto& x : enumerate_subsets(3))
        if (!x.empty() && disjoint(x, subset_of(3, {1}))) ++hits;
    CHECK(hits == 3);
}

TEST_CASE("disjointness product rule") {
    for (int m = 1; m <= 4; ++m) {
        const auto all = enumerate_subsets(m);
        for (const auto& x : all)
            for (const auto& a : all)
                for (const auto& b : all)
                    CHECK((disjoint(x, a) && disjoint(x, b)) == disjoint(x, set_union(a, b)));
    }
}

TEST_CASE("count of sets meeting A") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& a : enumerate_subsets(m)) {
            std::uint64_t meets = 0;
            for (const auto& x : enumerate_subsets(m))
                if (!disjoint(x, a)) ++meets;
            const std::uint64_t expected =
                (std::uint64_t{1} << m) - (std::uint64_t{1} << (m - a.size()));
            CHECK(meets == expected);
        }
    }
}

TEST_CASE("symmetric difference") {
    CHECK(sym_diff(subset_of(3, {1, 2}), subset_of(3, {2, 3})) == subset_of(3, {1, 3}));
    const auto all = enumerate_subsets(4);
    for (const auto& x : all) {
        CHECK(sym_diff(x, x) == empty_set(4));
        CHECK(sym_diff(x, empty_set(4)) == x);
        for (const auto& y : all) {
            CHECK(sym_diff(x, y) == sym_diff(y, x));
            // Componentwise F2 addition oracle.
            SubsetMask direct{0, 4};
            for (int i = 1; i <= 4; ++i)
                if (x.contains(i) != y.contains(i)) direct.bits |= 1u << (i - 1);
            CHECK(sym_diff(x, y) == direct);
            for (const auto& z : all)
                CHECK(sym_diff(sym_diff(x, y), z) == sym_diff(x, sym_diff(y, z)));
        }
    }
}

TEST_CASE("subset enumeration order") {
    const auto one = enumerate_subsets(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == empty_set(1));
    CHECK(one[1] == subset_of(1, {1}));

    const auto two = enumerate_subsets(2);
    REQUIRE(two.size() == 4);
    CHECK(two[0] == empty_set(2));
    CHECK(two[1] == subset_of(2, {1}));
    CHECK(two[2] == subset_of(2, {2}));
    CHECK(two[3] == subset_of(2, {1, 2}));

    CHECK(enumerate_subsets(5).size() == 32);
}

TEST_CASE("text round trip") {
    CHECK(to_string(subset_of(3, {1, 3})) == "{1,3}");
    CHECK(to_string(empty_set(3)) == "{}");
    CHECK(parse_subset(3, "{1,3}") == subset_of(3, {1, 3}));
    CHECK(parse_subset(3, "1,3") == subset_of(3, {1, 3}));
    CHECK(parse_subset(3, "{}") == empty_set(3));
    CHECK(parse_subset(3, "") == empty_set(3));
    for (const auto& x : enumerate_subsets(6)) CHECK(parse_subset(6, to_string(x)) == x);
}

TEST_CASE("dimension and range errors") {
    CHECK_THROWS_AS(disjoint(empty_set(2), empty_set(3)), DimensionError);
    CHECK_THROWS_AS(sym_diff(subset_of(2, {1}), subset_of(4, {1})), DimensionError);
    CHECK_THROWS_AS(enumerate_subsets(0), PreconditionError);
    CHECK_THROWS_AS(enumerate_subsets(kMaxAmbientDim + 1), PreconditionError);
    CHECK_THROWS_AS(subset_of(3, {4}), PreconditionError);
    CHECK_THROWS_AS(parse_subset(3, "0"), PreconditionError);
    CHECK_THROWS_AS(parse_subset(3, "junk"), PreconditionError);
}
