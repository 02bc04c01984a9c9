#ifndef FWCODES_CODES_HPP
#define FWCODES_CODES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwcodes/bitstring.hpp"
#include "fwcodes/ring.hpp"
#include "fwcodes/simplicial.hpp"

namespace fwc {

// Message enumeration caps: spectra and codeword sets walk 2^{2m} messages.
// The brute-force spectrum additionally multiplies by the defining-set size,
// so it gets the tighter cap.
inline constexpr int kMaxBruteforceDim = 8;
inline constexpr int kMaxCharsumDim = 12;

/// Exact weight → frequency map. Zero frequencies are never stored; all
/// counts stay below 2^63 for the supported m ≤ 30.
class WeightDistribution {
  public:
    void add(std::uint64_t weight, std::uint64_t frequency);

    std::uint64_t frequency(std::uint64_t weight) const;
    std::uint64_t total() const;
    std::size_t distinct_weights() const { return entries_.size(); }
    std::size_t distinct_nonzero_weights() const;
    std::uint64_t min_nonzero_weight() const;
    std::uint64_t max_weight() const;

    const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }

    /// Every frequency divided by `divisor`; throws InternalError if any
    /// frequency is not divisible.
    WeightDistribution scaled_down(std::uint64_t divisor) const;

    /// Enumerator notation: "1+6z^4+z^8". The constant term is the weight-0
    /// frequency; unit coefficients are omitted.
    std::string enumerator() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

  private:
    std::map<std::uint64_t, std::uint64_t> entries_;
};

/// Which construction produced a defining set.
enum class Family { L1, L2, L2Plain };

std::string to_string(Family family);
Family parse_family(const std::string& text);

/// An ordered multiset L ⊆ R^m of product shape: every element is t₁ + u·t₂
/// with t₁ ranging over `part1` and t₂ over `part2`. Element order is t₁
/// outer, t₂ inner, both parts in increasing bit-pattern order, so the
/// coordinate sequence of the resulting code is reproducible.
struct DefiningSet {
    int m = 0;
    std::vector<SubsetMask> part1;
    std::vector<SubsetMask> part2;

    std::size_t size() const { return part1.size() * part2.size(); }
    std::vector<RingVector> elements() const;
};

/// L = Δ₁ + u·Δ₂ᶜ. Requires Δ₁ nonempty and Δ₂ ≠ F_2^m.
DefiningSet make_l1(const SimplicialComplex& delta1, const SimplicialComplex& delta2);

/// L = Δ₁ᶜ + u·Δ₂ᶜ. Requires Δ₁ ≠ F_2^m and Δ₂ ≠ F_2^m (for a defining set
/// with pure F_2-part vectors use make_l2_plain instead).
DefiningSet make_l2(const SimplicialComplex& delta1, const SimplicialComplex& delta2);

/// L = Δ₁ᶜ with the u-part pinned to zero (part2 = [∅]). Requires Δ₁ ≠ F_2^m.
DefiningSet make_l2_plain(const SimplicialComplex& delta1);

/// Lee weight distribution of the message-indexed code {c_a : a ∈ R^m},
/// c_a = (⟨a,l⟩)_{l∈L}, by evaluating every inner product of every codeword.
/// Frequencies total 2^{2m}. `workers` = 0 picks the hardware concurrency;
/// the result is identical for every worker count.
WeightDistribution lee_spectrum_bruteforce(const DefiningSet& set, int workers = 0);

/// The same distribution through the character-sum route: each codeword
/// weight is |L| − ½·S₂(α)·(S₁(β) + S₁(α⊕β)) where the S sums run over the
/// defining parts and are evaluated by inclusion-exclusion over the
/// generating complexes, never by iterating the defining set. Throws
/// PreconditionError if the set does not match the complexes and family.
WeightDistribution lee_spectrum_charsum(const DefiningSet& set, Family family,
                                        const SimplicialComplex& delta1,
                                        const std::optional<SimplicialComplex>& delta2,
                                        int workers = 0);

/// One codeword over R, element j split into its F_2 and u parts.
struct RingCodeword {
    BitString a;
    BitString b;

    std::size_t length() const { return a.size(); }
    RingElement element(std::size_t j) const { return RingElement{a.test(j), b.test(j)}; }
    std::uint64_t lee_weight() const;

    friend bool operator==(const RingCodeword&, const RingCodeword&) = default;
};

RingCodeword evaluate_codeword(const DefiningSet& set, const RingVector& message);

/// The deduplicated codeword set together with the size of the kernel
/// {a : c_a = 0} of the evaluation map. |codewords| · kernel_size = 2^{2m}.
/// Codewords are listed by their first message in α-major message order.
struct DistinctCode {
    std::vector<RingCodeword> codewords;
    std::uint64_t kernel_size = 0;

    WeightDistribution lee_distribution() const;
};

DistinctCode distinct_code(const DefiningSet& set);

/// Binary image under the Gray map φ(a+ub) = (b, a+b) applied blockwise:
/// the first |L| bits of each word are the u-parts, the last |L| bits the
/// sums. The image of an R-linear code is F_2-linear.
struct GrayImage {
    std::size_t length = 0;          // n = 2|L|
    int dimension = 0;               // k = log2(#codewords)
    std::vector<BitString> words;
    WeightDistribution hamming;      // one entry per distinct codeword
    std::uint64_t min_distance = 0;  // = min nonzero weight by linearity
};

GrayImage gray_image(const std::vector<RingCodeword>& codewords);

}  // namespace fwc

#endif
