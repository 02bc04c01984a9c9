#include "fwcodes/codes.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <exception>
#include <thread>

#include "fwcodes/errors.hpp"

namespace fwc {

namespace {

int parity(std::uint32_t x) { return std::popcount(x) & 1; }

int effective_workers(int workers, std::uint64_t jobs) {
    if (workers <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        workers = hw == 0 ? 1 : static_cast<int>(hw);
    }
    if (static_cast<std::uint64_t>(workers) > jobs) workers = static_cast<int>(jobs);
    return std::max(workers, 1);
}

// Splits [0, total) into contiguous blocks, runs `body(begin, end, slot)` on
// each, and merges the per-slot tallies by addition. Merge order is fixed by
// slot index, so the result does not depend on thread scheduling.
template <typename Body>
WeightDistribution run_partitioned(std::uint64_t total, int workers, Body body) {
    int n = effective_workers(workers, total);
    std::vector<std::map<std::uint64_t, std::uint64_t>> tallies(n);
    if (n == 1) {
        body(std::uint64_t{0}, total, tallies[0]);
    } else {
        std::uint64_t chunk = (total + n - 1) / n;
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> failures(n);
        for (int i = 0; i < n; ++i) {
            std::uint64_t begin = chunk * i;
            std::uint64_t end = std::min(total, begin + chunk);
            threads.emplace_back([&, i, begin, end] {
                try {
                    body(begin, end, tallies[i]);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }
    WeightDistribution dist;
    for (auto& tally : tallies)
        for (auto [w, f] : tally) dist.add(w, f);
    return dist;
}

}  // namespace

void WeightDistribution::add(std::uint64_t weight, std::uint64_t frequency) {
    if (frequency == 0) return;
    entries_[weight] += frequency;
}

std::uint64_t WeightDistribution::frequency(std::uint64_t weight) const {
    auto it = entries_.find(weight);
    return it == entries_.end() ? 0 : it->second;
}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t sum = 0;
    for (auto [w, f] : entries_) sum += f;
    return sum;
}

std::size_t WeightDistribution::distinct_nonzero_weights() const {
    return entries_.size() - (entries_.count(0) ? 1 : 0);
}

std::uint64_t WeightDistribution::min_nonzero_weight() const {
    for (auto [w, f] : entries_)
        if (w > 0) return w;
    throw PreconditionError("weight distribution has no nonzero weights");
}

std::uint64_t WeightDistribution::max_weight() const {
    return entries_.empty() ? 0 : entries_.rbegin()->first;
}

WeightDistribution WeightDistribution::scaled_down(std::uint64_t divisor) const {
    if (divisor == 0) throw InternalError("scaled_down: zero divisor");
    WeightDistribution out;
    for (auto [w, f] : entries_) {
        if (f % divisor != 0)
            throw InternalError("scaled_down: frequency " + std::to_string(f) +
                                " at weight " + std::to_string(w) +
                                " is not divisible by " + std::to_string(divisor));
        out.add(w, f / divisor);
    }
    return out;
}

std::string WeightDistribution::enumerator() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (auto [w, f] : entries_) {
        if (!out.empty()) out += "+";
        if (w == 0) {
            out += std::to_string(f);
            continue;
        }
        if (f != 1) out += std::to_string(f);
        out += "z";
        if (w != 1) out += "^" + std::to_string(w);
    }
    return out;
}

std::string to_string(Family family) {
    switch (family) {
        case Family::L1: return "L1";
        case Family::L2: return "L2";
        case Family::L2Plain: return "L2plain";
    }
    throw InternalError("unknown family");
}

Family parse_family(const std::string& text) {
    std::string lower;
    for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "l1") return Family::L1;
    if (lower == "l2") return Family::L2;
    if (lower == "l2plain") return Family::L2Plain;
    throw PreconditionError("unknown family '" + text + "' (expected L1, L2 or L2plain)");
}

std::vector<RingVector> DefiningSet::elements() const {
    std::vector<RingVector> out;
    out.reserve(size());
    for (const auto& t1 : part1)
        for (const auto& t2 : part2) out.push_back(ring_vector(t1, t2));
    return out;
}

DefiningSet make_l1(const SimplicialComplex& delta1, const SimplicialComplex& delta2) {
    if (delta1.ambient_dim() != delta2.ambient_dim())
        throw DimensionError("make_l1: complexes live in different ambient dimensions");
    if (delta1.is_empty_complex())
        throw PreconditionError("make_l1: the F_2-part complex must be nonempty");
    if (delta2.is_full())
        throw PreconditionError(
            "make_l1: the u-part complex must be proper (its complement is the u-part domain)");
    DefiningSet set;
    set.m = delta1.ambient_dim();
    set.part1 = delta1.elements();
    set.part2 = delta2.complement_elements();
    return set;
}

DefiningSet make_l2(const SimplicialComplex& delta1, const SimplicialComplex& delta2) {
    if (delta1.ambient_dim() != delta2.ambient_dim())
        throw DimensionError("make_l2: complexes live in different ambient dimensions");
    if (delta1.is_full())
        throw PreconditionError(
            "make_l2: the F_2-part complex must be proper (its complement is the F_2-part domain)");
    if (delta2.is_full())
        throw PreconditionError(
            "make_l2: the u-part complex must be proper (its complement is the u-part domain)");
    DefiningSet set;
    set.m = delta1.ambient_dim();
    set.part1 = delta1.complement_elements();
    set.part2 = delta2.complement_elements();
    return set;
}

DefiningSet make_l2_plain(const SimplicialComplex& delta1) {
    if (delta1.is_full())
        throw PreconditionError(
            "make_l2_plain: the complex must be proper (its complement is the F_2-part domain)");
    DefiningSet set;
    set.m = delta1.ambient_dim();
    set.part1 = delta1.complement_elements();
    set.part2 = {empty_set(set.m)};
    return set;
}

WeightDistribution lee_spectrum_bruteforce(const DefiningSet& set, int workers) {
    if (set.m > kMaxBruteforceDim)
        throw PreconditionError("lee_spectrum_bruteforce supports m <= " +
                                std::to_string(kMaxBruteforceDim) + " (got m=" +
                                std::to_string(set.m) +
                                "); use the character-sum or closed-form methods for larger m");
    if (set.part1.empty() || set.part2.empty())
        throw PreconditionError("lee_spectrum_bruteforce: empty defining set");
    const std::uint64_t messages = std::uint64_t{1} << (2 * set.m);
    const std::uint32_t low = (std::uint32_t{1} << set.m) - 1;
    std::vector<std::uint32_t> p1, p2;
    for (const auto& t : set.part1) p1.push_back(t.bits);
    for (const auto& t : set.part2) p2.push_back(t.bits);
    return run_partitioned(messages, workers,
                           [&](std::uint64_t begin, std::uint64_t end,
                               std::map<std::uint64_t, std::uint64_t>& tally) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const std::uint32_t alpha = static_cast<std::uint32_t>(idx >> set.m);
            const std::uint32_t beta = static_cast<std::uint32_t>(idx) & low;
            std::uint64_t w = 0;
            for (std::uint32_t t1 : p1) {
                const int x = parity(alpha & t1);
                const int q = parity(beta & t1);
                for (std::uint32_t t2 : p2) {
                    const int y = q ^ parity(alpha & t2);
                    w += static_cast<std::uint64_t>(y + (x ^ y));
                }
            }
            ++tally[w];
        }
    });
}

WeightDistribution lee_spectrum_charsum(const DefiningSet& set, Family family,
                                        const SimplicialComplex& delta1,
                                        const std::optional<SimplicialComplex>& delta2,
                                        int workers) {
    if (set.m > kMaxCharsumDim)
        throw PreconditionError("lee_spectrum_charsum supports m <= " +
                                std::to_string(kMaxCharsumDim) + " (got m=" +
                                std::to_string(set.m) + ")");
    if (family == Family::L2Plain) {
        if (delta2.has_value())
            throw PreconditionError("lee_spectrum_charsum: the L2plain family takes no u-part complex");
    } else if (!delta2.has_value()) {
        throw PreconditionError("lee_spectrum_charsum: families L1 and L2 need the u-part complex");
    }

    // The set must actually be the one the complexes generate, otherwise the
    // character sums below describe a different code.
    DefiningSet expected;
    switch (family) {
        case Family::L1: expected = make_l1(delta1, *delta2); break;
        case Family::L2: expected = make_l2(delta1, *delta2); break;
        case Family::L2Plain: expected = make_l2_plain(delta1); break;
    }
    if (expected.m != set.m || expected.part1 != set.part1 || expected.part2 != set.part2)
        throw PreconditionError(
            "lee_spectrum_charsum: defining set does not match the given complexes and family");

    const int m = set.m;
    const std::uint32_t points = std::uint32_t{1} << m;
    const std::int64_t set_size = static_cast<std::int64_t>(set.size());

    // s1[γ] = Σ_{t₁ in the F_2-part domain} (−1)^{γ·t₁}, via inclusion-
    // exclusion over the generating complex; likewise s2 over the u-part
    // domain. Neither table touches the defining set itself.
    std::vector<std::int64_t> s1(points), s2(points);
    for (std::uint32_t g = 0; g < points; ++g) {
        SubsetMask gamma{g, m};
        s1[g] = (family == Family::L1) ? delta1.character_sum(gamma)
                                       : complement_character_sum(delta1, gamma);
        s2[g] = (family == Family::L2Plain) ? 1 : complement_character_sum(*delta2, gamma);
    }

    const std::uint64_t messages = std::uint64_t{1} << (2 * m);
    const std::uint32_t low = points - 1;
    return run_partitioned(messages, workers,
                           [&](std::uint64_t begin, std::uint64_t end,
                               std::map<std::uint64_t, std::uint64_t>& tally) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            const std::uint32_t alpha = static_cast<std::uint32_t>(idx >> m);
            const std::uint32_t beta = static_cast<std::uint32_t>(idx) & low;
            const std::int64_t product = s2[alpha] * (s1[beta] + s1[alpha ^ beta]);
            if (product % 2 != 0)
                throw InternalError("lee_spectrum_charsum: odd character product");
            const std::int64_t w = set_size - product / 2;
            if (w < 0) throw InternalError("lee_spectrum_charsum: negative weight");
            ++tally[static_cast<std::uint64_t>(w)];
        }
    });
}

std::uint64_t RingCodeword::lee_weight() const {
    return b.count() + (a ^ b).count();
}

RingCodeword evaluate_codeword(const DefiningSet& set, const RingVector& message) {
    if (message.dim() != set.m)
        throw DimensionError("evaluate_codeword: message dimension does not match the set");
    RingCodeword cw{BitString(set.size()), BitString(set.size())};
    std::size_t j = 0;
    for (const auto& t1 : set.part1) {
        const int x = parity(message.alpha.bits & t1.bits);
        const int q = parity(message.beta.bits & t1.bits);
        for (const auto& t2 : set.part2) {
            const int y = q ^ parity(message.alpha.bits & t2.bits);
            cw.a.set(j, x != 0);
            cw.b.set(j, y != 0);
            ++j;
        }
    }
    return cw;
}

WeightDistribution DistinctCode::lee_distribution() const {
    WeightDistribution dist;
    for (const auto& cw : codewords) dist.add(cw.lee_weight(), 1);
    return dist;
}

DistinctCode distinct_code(const DefiningSet& set) {
    if (set.m > kMaxBruteforceDim)
        throw PreconditionError("distinct_code supports m <= " + std::to_string(kMaxBruteforceDim) +
                                " (got m=" + std::to_string(set.m) + ")");
    if (set.part1.empty() || set.part2.empty())
        throw PreconditionError("distinct_code: empty defining set");
    const int m = set.m;
    const std::uint32_t messages = std::uint32_t{1} << (2 * m);
    const std::uint32_t low = (std::uint32_t{1} << m) - 1;
    std::vector<std::uint32_t> p1, p2;
    for (const auto& t : set.part1) p1.push_back(t.bits);
    for (const auto& t : set.part2) p2.push_back(t.bits);

    // The evaluation map a ↦ c_a is additive, so codewords come in kernel
    // cosets of equal size. Find the kernel first, then walk messages in
    // α-major order and keep one representative per coset.
    auto is_zero_codeword = [&](std::uint32_t alpha, std::uint32_t beta) {
        for (std::uint32_t t1 : p1) {
            const int x = parity(alpha & t1);
            const int q = parity(beta & t1);
            for (std::uint32_t t2 : p2) {
                if (x || (q ^ parity(alpha & t2))) return false;
            }
        }
        return true;
    };
    std::vector<std::uint32_t> kernel;
    for (std::uint32_t idx = 0; idx < messages; ++idx) {
        if (is_zero_codeword(idx >> m, idx & low)) kernel.push_back(idx);
    }
    if (kernel.empty() || messages % kernel.size() != 0)
        throw InternalError("distinct_code: kernel size does not divide the message space");

    DistinctCode code;
    code.kernel_size = kernel.size();
    code.codewords.reserve(messages / kernel.size());
    std::vector<bool> covered(messages, false);
    for (std::uint32_t idx = 0; idx < messages; ++idx) {
        if (covered[idx]) continue;
        RingVector message = ring_vector(SubsetMask{idx >> m, m}, SubsetMask{idx & low, m});
        code.codewords.push_back(evaluate_codeword(set, message));
        for (std::uint32_t k : kernel) covered[idx ^ k] = true;
    }
    if (code.codewords.size() * code.kernel_size != messages)
        throw InternalError("distinct_code: coset cover mismatch");
    return code;
}

GrayImage gray_image(const std::vector<RingCodeword>& codewords) {
    if (codewords.empty()) throw PreconditionError("gray_image: empty code");
    const std::size_t ring_length = codewords.front().length();
    GrayImage image;
    image.length = 2 * ring_length;
    image.words.reserve(codewords.size());
    for (const auto& cw : codewords) {
        if (cw.length() != ring_length)
            throw PreconditionError("gray_image: codewords of unequal length");
        BitString word(2 * ring_length);
        const BitString mix = cw.a ^ cw.b;
        for (std::size_t j = 0; j < ring_length; ++j) {
            word.set(j, cw.b.test(j));
            word.set(ring_length + j, mix.test(j));
        }
        image.hamming.add(word.count(), 1);
        image.words.push_back(std::move(word));
    }
    const std::size_t count = image.words.size();
    if (!std::has_single_bit(count))
        throw InternalError("gray_image: codeword count " + std::to_string(count) +
                            " is not a power of two");
    image.dimension = std::bit_width(count) - 1;
    image.min_distance =
        (count == 1) ? 0 : image.hamming.min_nonzero_weight();
    return image;
}

}  // namespace fwc
