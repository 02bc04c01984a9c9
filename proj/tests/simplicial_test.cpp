#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "fwcodes/simplicial.hpp"
#include "fwcodes/subsets.hpp"

using namespace fwc;

namespace {

std::int64_t direct_character_sum(const SimplicialComplex& complex, const SubsetMask& beta) {
    std::int64_t sum = 0;
    for (const auto& v : complex.elements()) sum += dot_parity(v, beta) ? -1 : 1;
    return sum;
}

}  // namespace

TEST_CASE("maximal family reduction") {
    const auto reduced = SimplicialComplex::from_maximal(3, {subset_of(3, {1, 2}), subset_of(3, {1})});
    REQUIRE(reduced.maximal().size() == 1);
    CHECK(reduced.maximal().front() == subset_of(3, {1, 2}));

    const auto antichain =
        SimplicialComplex::from_maximal(3, {subset_of(3, {1, 2}), subset_of(3, {2, 3})});
    REQUIRE(antichain.maximal().size() == 2);
    CHECK(antichain.maximal()[0] == subset_of(3, {1, 2}));
    CHECK(antichain.maximal()[1] == subset_of(3, {2, 3}));

    const auto none = SimplicialComplex::from_maximal(2, {});
    CHECK(none.is_empty_complex());
    CHECK(none.size() == 0);

    // The complex generated by {∅} is the one-element complex {∅}.
    const auto point = SimplicialComplex::from_maximal(2, {empty_set(2)});
    CHECK(point.size() == 1);
    CHECK(point.contains(empty_set(2)));
    CHECK_FALSE(point.contains(subset_of(2, {1})));
}

TEST_CASE("size by inclusion-exclusion") {
    for (int m = 1; m <= 6; ++m)
        for (const auto& face : enumerate_subsets(m))
            CHECK(SimplicialComplex::generated_by(face).size() ==
                  (std::uint64_t{1} << face.size()));
    CHECK(SimplicialComplex::from_maximal(3, {subset_of(3, {1, 2}), subset_of(3, {2, 3})}).size() ==
          6);
    CHECK(SimplicialComplex::empty(4).size() == 0);
    CHECK(SimplicialComplex::full(4).size() == 16);
}

TEST_CASE("character sum of a single-face complex") {
    for (int m = 2; m <= 5; ++m) {
        for (const auto& a : enumerate_subsets(m)) {
            const auto complex = SimplicialComplex::generated_by(a);
            for (const auto& beta : enumerate_subsets(m)) {
                const std::int64_t expected =
                    disjoint(beta, a) ? std::int64_t{1} << a.size() : 0;
                CHECK(complex.character_sum(beta) == expected);
            }
        }
    }
}

TEST_CASE("character sum at the all-ones point equals the size") {
    const auto complex =
        SimplicialComplex::from_maximal(4, {subset_of(4, {1, 2, 3}), subset_of(4, {2, 4})});
    CHECK(complex.character_sum(empty_set(4)) == static_cast<std::int64_t>(complex.size()));
}

TEST_CASE("element enumeration") {
    const auto square = SimplicialComplex::generated_by(subset_of(2, {1, 2}));
    const auto elems = square.elements();
    REQUIRE(elems.size() == 4);
    CHECK(elems[0] == empty_set(2));
    CHECK(elems[1] == subset_of(2, {1}));
    CHECK(elems[2] == subset_of(2, {2}));
    CHECK(elems[3] == subset_of(2, {1, 2}));

    const auto wedge = SimplicialComplex::from_maximal(2, {subset_of(2, {1}), subset_of(2, {2})});
    const auto welems = wedge.elements();
    REQUIRE(welems.size() == 3);
    CHECK(welems[0] == empty_set(2));
    CHECK(welems[1] == subset_of(2, {1}));
    CHECK(welems[2] == subset_of(2, {2}));
}

TEST_CASE("complement enumeration") {
    CHECK(SimplicialComplex::full(3).complement_elements().empty());

    const auto segment = SimplicialComplex::generated_by(subset_of(2, {1}));
    const auto comp = segment.complement_elements();
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == subset_of(2, {2}));
    CHECK(comp[1] == subset_of(2, {1, 2}));
}

TEST_CASE("random complexes against direct enumeration") {
    std::mt19937 rng(7u);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + int(rng() % 8);
        const int candidates = int(rng() % 5);
        std::vector<SubsetMask> faces;
        for (int i = 0; i < candidates; ++i)
            faces.push_back(SubsetMask{std::uint32_t(rng()) & ((1u << m) - 1), m});
        const auto complex = SimplicialComplex::from_maximal(m, faces);

        const auto elems = complex.elements();
        CHECK(complex.size() == elems.size());
        CHECK(elems.size() + complex.complement_elements().size() == (std::size_t{1} << m));
        for (const auto& v : elems) CHECK(complex.contains(v));
        for (const auto& v : complex.complement_elements()) CHECK_FALSE(complex.contains(v));

        for (int probe = 0; probe < 4; ++probe) {
            const SubsetMask beta{std::uint32_t(rng()) & ((1u << m) - 1), m};
            CHECK(complex.character_sum(beta) == direct_character_sum(complex, beta));
            const std::int64_t full_point = beta.empty() ? std::int64_t{1} << m : 0;
            CHECK(complex.character_sum(beta) + complement_character_sum(complex, beta) ==
                  full_point);
        }
    }
}

TEST_CASE("dimension errors") {
    const auto complex = SimplicialComplex::generated_by(subset_of(3, {1}));
    CHECK_THROWS_AS(complex.character_sum(empty_set(2)), DimensionError);
    CHECK_THROWS_AS(complex.contains(subset_of(4, {1})), DimensionError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal(2, {subset_of(3, {1})}), DimensionError);
}
