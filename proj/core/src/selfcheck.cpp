#include "fwcodes/selfcheck.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "fwcodes/codes.hpp"
#include "fwcodes/counting.hpp"
#include "fwcodes/errors.hpp"
#include "fwcodes/optimality.hpp"
#include "fwcodes/ring.hpp"
#include "fwcodes/simplicial.hpp"
#include "fwcodes/spectra.hpp"
#include "fwcodes/subsets.hpp"

namespace fwc::selfcheck {

namespace {

std::string dist_to_string(const WeightDistribution& dist) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (auto [w, f] : dist.entries()) {
        if (!first) out << ", ";
        first = false;
        out << w << ":" << f;
    }
    out << "}";
    return out.str();
}

// Tallies a sweep; keeps only the first few failure descriptions so a broken
// formula does not produce megabytes of output.
struct Sweep {
    std::uint64_t points = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++points;
        if (ok) return;
        ++failed;
        if (failures.size() < 3) failures.push_back(describe());
    }

    void expect_equal(const WeightDistribution& got, const WeightDistribution& want,
                      const std::string& label) {
        expect(got == want, [&] {
            return label + ": got " + dist_to_string(got) + ", want " + dist_to_string(want);
        });
    }

    CheckResult result(const std::string& name, const std::string& unit) const {
        CheckResult r;
        r.name = name;
        r.passed = failed == 0;
        std::ostringstream detail;
        if (r.passed) {
            detail << points << " " << unit << " verified";
        } else {
            detail << failed << " of " << points << " " << unit << " failed";
            for (const auto& f : failures) detail << "; " << f;
        }
        r.detail = detail.str();
        return r;
    }
};

SimplicialComplex single(int m, std::uint32_t bits) {
    return SimplicialComplex::generated_by(SubsetMask{bits, m});
}

DefiningSet build_set(Family family, const SimplicialComplex& d1, const SimplicialComplex& d2) {
    switch (family) {
        case Family::L1: return make_l1(d1, d2);
        case Family::L2: return make_l2(d1, d2);
        case Family::L2Plain: return make_l2_plain(d1);
    }
    throw InternalError("unknown family");
}

// ---- fixture pipeline: construct, enumerate, deduplicate, Gray-map -------

CheckResult check_worked_examples(int workers) {
    struct Fixture {
        const char* label;
        int m;
        Family family;
        std::vector<int> a_elems;
        std::vector<int> b_elems;
        std::uint64_t n;
        int k;
        std::uint64_t d;
        const char* enumerator;
    };
    const std::vector<Fixture> fixtures = {
        {"L1 m=2 A={1} B={1}", 2, Family::L1, {1}, {1}, 8, 3, 4, "1+6z^4+z^8"},
        {"L1 m=2 A={1,2} B={1}", 2, Family::L1, {1, 2}, {1}, 16, 4, 8, "1+13z^8+2z^12"},
        {"L2 m=3 A={1} B={2,3}", 3, Family::L2, {1}, {2, 3}, 48, 6, 20,
         "1+6z^20+52z^24+3z^32+2z^36"},
        {"L2 m=3 A={1,2} B={1,2}", 3, Family::L2, {1, 2}, {1, 2}, 32, 6, 16, "1+62z^16+z^32"},
        {"L2plain m=3 A={1}", 3, Family::L2Plain, {1}, {}, 12, 6, 3,
         "1+8z^3+6z^4+16z^6+24z^7+9z^8"},
        {"L2plain m=3 A={1,2}", 3, Family::L2Plain, {1, 2}, {}, 8, 6, 2,
         "1+12z^2+38z^4+12z^6+z^8"},
    };

    Sweep sweep;
    for (const auto& fx : fixtures) {
        const auto d1 = SimplicialComplex::generated_by(subset_of(fx.m, fx.a_elems));
        const auto d2 = SimplicialComplex::generated_by(subset_of(fx.m, fx.b_elems));
        const auto set = build_set(fx.family, d1, d2);
        const auto message = lee_spectrum_bruteforce(set, workers);
        const auto code = distinct_code(set);

        sweep.expect_equal(message.scaled_down(code.kernel_size), code.lee_distribution(),
                           std::string(fx.label) + " kernel bridge");

        const auto image = gray_image(code.codewords);
        sweep.expect(image.length == fx.n && image.dimension == fx.k &&
                         image.min_distance == fx.d,
                     [&] {
                         std::ostringstream o;
                         o << fx.label << ": got [" << image.length << "," << image.dimension
                           << "," << image.min_distance << "], want [" << fx.n << "," << fx.k
                           << "," << fx.d << "]";
                         return o.str();
                     });
        sweep.expect(image.hamming.enumerator() == fx.enumerator, [&] {
            return std::string(fx.label) + ": enumerator " + image.hamming.enumerator() +
                   ", want " + fx.enumerator;
        });

        // The distribution-only route must land on the same parameters as
        // the materialized codewords.
        const auto bp = binary_params_from_distribution(message, set.size());
        sweep.expect(bp == BinaryParams(fx.n, fx.k, fx.d), [&] {
            std::ostringstream o;
            o << fx.label << ": distribution route gave [" << bp.n << "," << bp.k << "," << bp.d
              << "]";
            return o.str();
        });
    }
    return sweep.result("worked-example fixtures", "fixture assertions");
}

// ---- three-way agreement: closed form vs enumeration vs character sums ---

CheckResult check_three_way_spectra(int workers) {
    Sweep sweep;
    for (int m = 2; m <= 5; ++m) {
        const std::uint32_t points = std::uint32_t{1} << m;
        for (std::uint32_t a = 0; a < points; ++a) {
            const SubsetMask set_a{a, m};
            const auto d1 = single(m, a);
            for (std::uint32_t b = 0; b < points; ++b) {
                const SubsetMask set_b{b, m};
                const int size_b = set_b.size();
                if (size_b < 1 || size_b > m - 1) continue;
                const auto d2 = single(m, b);
                const auto params = SpectrumParams::from_sets(set_a, set_b);
                const std::string tag = "m=" + std::to_string(m) + " A=" + to_string(set_a) +
                                        " B=" + to_string(set_b);

                {  // F_2-part complex plus u-part complement
                    const auto set = make_l1(d1, d2);
                    const auto brute = lee_spectrum_bruteforce(set, workers);
                    const auto charsum = lee_spectrum_charsum(set, Family::L1, d1, d2, workers);
                    const auto closed = closed_form_l1(params);
                    sweep.expect_equal(closed, brute, "L1 closed vs brute " + tag);
                    sweep.expect_equal(charsum, brute, "L1 charsum vs brute " + tag);
                    if (set_a.empty())
                        sweep.expect_equal(closed_form_l1_u_only(m, size_b), brute,
                                           "L1 u-only closed vs brute " + tag);
                    if (set_a.size() == m)
                        sweep.expect_equal(closed_form_l1_full(m, size_b), brute,
                                           "L1 full closed vs brute " + tag);
                }

                const int size_a = set_a.size();
                if (size_a >= 1 && size_a <= m - 1) {  // both parts complements
                    const auto set = make_l2(d1, d2);
                    const auto brute = lee_spectrum_bruteforce(set, workers);
                    const auto charsum = lee_spectrum_charsum(set, Family::L2, d1, d2, workers);
                    sweep.expect_equal(closed_form_l2(params), brute, "L2 closed vs brute " + tag);
                    sweep.expect_equal(charsum, brute, "L2 charsum vs brute " + tag);
                }
            }

            // plain complement family (no u-part)
            const int size_a = set_a.size();
            if (size_a >= 1 && size_a <= m - 1) {
                const auto set = make_l2_plain(d1);
                const auto brute = lee_spectrum_bruteforce(set, workers);
                const auto charsum =
                    lee_spectrum_charsum(set, Family::L2Plain, d1, std::nullopt, workers);
                const std::string tag = "m=" + std::to_string(m) + " A=" + to_string(set_a);
                sweep.expect_equal(closed_form_l2_plain(m, size_a), brute,
                                   "L2plain closed vs brute " + tag);
                sweep.expect_equal(charsum, brute, "L2plain charsum vs brute " + tag);
                if (size_a == m - 1)
                    sweep.expect_equal(closed_form_l2_plain_corank1(m), brute,
                                       "L2plain corank-1 closed vs brute " + tag);
            }
        }
    }
    // The merged corank-1 table must stay a pure specialization well past
    // the enumeration range.
    for (int m = 2; m <= 8; ++m)
        sweep.expect_equal(closed_form_l2_plain_corank1(m), closed_form_l2_plain(m, m - 1),
                           "corank-1 specialization m=" + std::to_string(m));
    return sweep.result("three-way spectrum agreement", "distribution comparisons");
}

// ---- counting closed forms vs exhaustive predicate counts ----------------

CheckResult check_counting(int /*workers*/) {
    Sweep sweep;
    for (int m = 1; m <= 5; ++m) {
        const std::uint32_t points = std::uint32_t{1} << m;
        for (std::uint32_t a = 0; a < points; ++a) {
            for (std::uint32_t b = 0; b < points; ++b) {
                const CountingParams p(SubsetMask{a, m}, SubsetMask{b, m});
                const std::string tag = "m=" + std::to_string(m) + " A=" +
                                        to_string(p.set_a) + " B=" + to_string(p.set_b);
                const auto split = disjoint_split(p);
                sweep.expect(split == disjoint_split_bruteforce(p),
                             [&] { return "disjoint split closed vs brute " + tag; });
                const auto pair = pair_disjoint_split(p);
                sweep.expect(pair == pair_disjoint_split_bruteforce(p),
                             [&] { return "pair split closed vs brute " + tag; });
                const std::uint64_t expected_total =
                    ((std::uint64_t{1} << (m - p.set_b.size())) - 1) *
                    ((std::uint64_t{1} << m) - 2);
                sweep.expect(pair.total() == expected_total,
                             [&] { return "pair split total identity " + tag; });
            }
        }
    }
    return sweep.result("counting closed forms", "parameter points");
}

// ---- random complexes: inclusion-exclusion vs direct enumeration ---------

CheckResult check_random_complexes(int /*workers*/) {
    Sweep sweep;
    std::mt19937 rng(20260825);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = std::uniform_int_distribution<int>(1, 10)(rng);
        const int count = std::uniform_int_distribution<int>(0, 4)(rng);
        std::uniform_int_distribution<std::uint32_t> mask_dist(0, (std::uint32_t{1} << m) - 1);
        std::vector<SubsetMask> candidates;
        for (int i = 0; i < count; ++i) candidates.push_back(SubsetMask{mask_dist(rng), m});
        const auto complex = SimplicialComplex::from_maximal(m, candidates);
        const auto members = complex.elements();
        const std::string tag = "trial " + std::to_string(trial);

        sweep.expect(complex.size() == members.size(),
                     [&] { return tag + ": size formula vs enumeration"; });
        sweep.expect(complex.complement_elements().size() ==
                         (std::uint64_t{1} << m) - complex.size(),
                     [&] { return tag + ": complement partition"; });
        for (const auto& v : members)
            if (!complex.contains(v)) {
                sweep.expect(false, [&] { return tag + ": enumerated non-member"; });
                break;
            }

        for (int probe = 0; probe < 4; ++probe) {
            const SubsetMask beta{probe == 0 ? 0 : mask_dist(rng), m};
            std::int64_t direct = 0;
            for (const auto& v : members)
                direct += (std::popcount(v.bits & beta.bits) % 2 == 0) ? 1 : -1;
            sweep.expect(complex.character_sum(beta) == direct, [&] {
                return tag + ": sign evaluation at beta=" + to_string(beta) + " got " +
                       std::to_string(complex.character_sum(beta)) + ", want " +
                       std::to_string(direct);
            });
            const std::int64_t whole = beta.empty() ? (std::int64_t{1} << m) : 0;
            sweep.expect(complement_character_sum(complex, beta) == whole - direct,
                         [&] { return tag + ": complement sign identity"; });
        }
    }
    return sweep.result("random-complex enumeration oracle", "oracle assertions");
}

// ---- Gray map: isometry, additivity, bijectivity --------------------------

CheckResult check_gray_isometry(int /*workers*/) {
    Sweep sweep;
    for (int m = 1; m <= 4; ++m) {
        const std::uint32_t points = std::uint32_t{1} << m;
        std::vector<RingVector> all;
        for (std::uint32_t a = 0; a < points; ++a)
            for (std::uint32_t b = 0; b < points; ++b)
                all.push_back(ring_vector(SubsetMask{a, m}, SubsetMask{b, m}));

        std::set<std::string> images;
        for (const auto& x : all) images.insert(gray(x).to_string());
        sweep.expect(images.size() == all.size(),
                     [&] { return "m=" + std::to_string(m) + ": Gray map is not injective"; });

        for (const auto& x : all) {
            for (const auto& y : all) {
                const auto sum = ring_add(x, y);
                const bool additive = gray(sum) == (gray(x) ^ gray(y));
                const bool isometric =
                    lee_weight(sum) == hamming_distance(gray(x), gray(y));
                sweep.expect(additive && isometric, [&] {
                    return "m=" + std::to_string(m) + " x=(" + to_string(x.alpha) + "," +
                           to_string(x.beta) + ") y=(" + to_string(y.alpha) + "," +
                           to_string(y.beta) + "): " + (additive ? "isometry" : "additivity") +
                           " failed";
                });
            }
        }
    }
    return sweep.result("Gray isometry and linearity", "vector-pair assertions");
}

// ---- Griesmer certificates ------------------------------------------------

CheckResult check_griesmer(int /*workers*/) {
    Sweep sweep;
    // Family with F_2-part complex inside the defining set: the Gray images
    // [2^{|A|+1}(2^m−2^{|B|}), m+|A|, 2^{|A|}(2^m−2^{|B|})] are always
    // distance optimal, and the bounding sum lands exactly |A|+|B| past n.
    for (int m = 2; m <= 8; ++m) {
        for (int a = 0; a <= m; ++a) {
            for (int b = 1; b <= m - 1; ++b) {
                for (int c = std::max(a, b); c <= std::min(m, a + b); ++c) {
                    const SpectrumParams params(m, a, b, c);
                    const std::uint64_t length =
                        (std::uint64_t{1} << a) * ((std::uint64_t{1} << m) - (std::uint64_t{1} << b));
                    const auto bp =
                        binary_params_from_distribution(closed_form_l1(params), length);
                    const std::string tag = "m=" + std::to_string(m) + " |A|=" +
                                            std::to_string(a) + " |B|=" + std::to_string(b) +
                                            " |A∪B|=" + std::to_string(c);
                    sweep.expect(bp.n == 2 * length && bp.k == m + a && bp.d == length, [&] {
                        std::ostringstream o;
                        o << "L1 image params " << tag << ": got [" << bp.n << "," << bp.k << ","
                          << bp.d << "]";
                        return o.str();
                    });
                    sweep.expect(distance_optimal_by_griesmer(bp),
                                 [&] { return "distance optimality " + tag; });
                    sweep.expect(griesmer_sum(bp.k, bp.d + 1) ==
                                     bp.n + static_cast<std::uint64_t>(a) + b,
                                 [&] { return "bounding-sum identity " + tag; });
                }
            }
        }
    }
    // Corank-1 L2 family with A=B: Gray images [2^{2m−1}, 2m, 2^{2m−2}]
    // meet the bound with equality.
    for (int m = 2; m <= 8; ++m) {
        const SpectrumParams params(m, m - 1, m - 1, m - 1);
        const std::uint64_t side = (std::uint64_t{1} << m) - (std::uint64_t{1} << (m - 1));
        const auto bp = binary_params_from_distribution(closed_form_l2(params), side * side);
        const std::string tag = "m=" + std::to_string(m);
        sweep.expect(bp.n == (std::uint64_t{1} << (2 * m - 1)) && bp.k == 2 * m &&
                         bp.d == (std::uint64_t{1} << (2 * m - 2)),
                     [&] { return "L2 equality-family params " + tag; });
        sweep.expect(meets_griesmer(bp), [&] { return "bound equality " + tag; });
    }
    return sweep.result("Griesmer certificates", "certificate checks");
}

// ---- structural invariants ------------------------------------------------

CheckResult check_structural(int workers) {
    struct Instance {
        const char* label;
        Family family;
        SimplicialComplex d1;
        SimplicialComplex d2;
    };
    auto multi = [](int m, std::vector<std::vector<int>> faces) {
        std::vector<SubsetMask> masks;
        for (const auto& f : faces) masks.push_back(subset_of(m, f));
        return SimplicialComplex::from_maximal(m, masks);
    };
    const std::vector<Instance> instances = {
        {"L1 m=3 multi-face", Family::L1, multi(3, {{1, 2}, {2, 3}}), multi(3, {{3}})},
        {"L1 m=2 point complex", Family::L1, multi(2, {{}}), multi(2, {{2}})},
        {"L1 m=6 full by complement", Family::L1, multi(6, {{1, 2, 3, 4, 5, 6}}),
         multi(6, {{1, 2}, {3, 4}, {5, 6}})},
        {"L2 m=4 multi-face", Family::L2, multi(4, {{1, 2}, {3, 4}}), multi(4, {{2, 3, 4}})},
        {"L2plain m=5 multi-face", Family::L2Plain, multi(5, {{1, 2, 3}, {2, 4}, {5}}),
         SimplicialComplex::empty(5)},
        {"L2plain m=6 single", Family::L2Plain, multi(6, {{1, 2, 3, 4}}),
         SimplicialComplex::empty(6)},
    };

    const int max_workers = std::max(2u, std::thread::hardware_concurrency());
    Sweep sweep;
    for (const auto& inst : instances) {
        const auto set = build_set(inst.family, inst.d1, inst.d2);
        const int m = set.m;
        const std::uint64_t messages = std::uint64_t{1} << (2 * m);
        const std::string tag = inst.label;

        const auto brute = lee_spectrum_bruteforce(set, workers);
        const auto charsum =
            inst.family == Family::L2Plain
                ? lee_spectrum_charsum(set, inst.family, inst.d1, std::nullopt, workers)
                : lee_spectrum_charsum(set, inst.family, inst.d1, inst.d2, workers);
        sweep.expect_equal(charsum, brute, tag + ": charsum vs brute");
        sweep.expect(brute.total() == messages,
                     [&] { return tag + ": message total " + std::to_string(brute.total()); });

        const auto code = distinct_code(set);
        sweep.expect(code.codewords.size() * code.kernel_size == messages,
                     [&] { return tag + ": coset partition"; });
        sweep.expect(std::has_single_bit(code.codewords.size()),
                     [&] { return tag + ": codeword count not a power of two"; });
        sweep.expect_equal(brute.scaled_down(code.kernel_size), code.lee_distribution(),
                           tag + ": kernel bridge");

        const auto serial = [](const WeightDistribution& d) { return dist_to_string(d); };
        sweep.expect(serial(lee_spectrum_bruteforce(set, 1)) ==
                         serial(lee_spectrum_bruteforce(set, max_workers)),
                     [&] { return tag + ": enumeration differs across worker counts"; });
        const auto charsum_with = [&](int w) {
            return inst.family == Family::L2Plain
                       ? lee_spectrum_charsum(set, inst.family, inst.d1, std::nullopt, w)
                       : lee_spectrum_charsum(set, inst.family, inst.d1, inst.d2, w);
        };
        sweep.expect(serial(charsum_with(1)) == serial(charsum_with(max_workers)),
                     [&] { return tag + ": character sums differ across worker counts"; });
    }
    return sweep.result("structural invariants", "structural assertions");
}

}  // namespace

std::vector<CheckResult> run_all(int workers) {
    using Check = CheckResult (*)(int);
    const std::vector<std::pair<std::string, Check>> checks = {
        {"worked-example fixtures", check_worked_examples},
        {"three-way spectrum agreement", check_three_way_spectra},
        {"counting closed forms", check_counting},
        {"random-complex enumeration oracle", check_random_complexes},
        {"Gray isometry and linearity", check_gray_isometry},
        {"Griesmer certificates", check_griesmer},
        {"structural invariants", check_structural},
    };
    std::vector<CheckResult> results;
    for (const auto& [name, check] : checks) {
        try {
            results.push_back(check(workers));
        } catch (const std::exception& e) {
            results.push_back(
                CheckResult{name, false, std::string("unexpected exception: ") + e.what()});
        }
    }
    return results;
}

}  // namespace fwc::selfcheck
