#ifndef FWCODES_SIMPLICIAL_HPP
#define FWCODES_SIMPLICIAL_HPP

#include <cstdint>
#include <vector>

#include "fwcodes/subsets.hpp"

namespace fwc {

// Enumeration of all elements of a complex walks 2^m masks.
inline constexpr int kMaxEnumerationDim = 20;
// Inclusion-exclusion walks 2^l subfamilies of the maximal family.
inline constexpr int kMaxMaximalElements = 20;

/// A simplicial complex of F_2^m: a family of subsets of [m] closed under
/// taking subsets, stored by its maximal elements (an antichain, kept in
/// increasing bit-pattern order).
class SimplicialComplex {
  public:
    /// Builds the complex generated by `candidates`: candidates contained in
    /// another candidate are discarded, duplicates are kept once. An empty
    /// candidate list yields the empty complex (no elements at all); the list
    /// [∅] yields the one-element complex {∅}.
    static SimplicialComplex from_maximal(int m, std::vector<SubsetMask> candidates);

    /// The power set of a single face F.
    static SimplicialComplex generated_by(const SubsetMask& face);

    /// The full complex 2^[m] = F_2^m.
    static SimplicialComplex full(int m);

    /// The empty complex (size 0).
    static SimplicialComplex empty(int m);

    int ambient_dim() const { return m_; }
    const std::vector<SubsetMask>& maximal() const { return maximal_; }
    bool has_single_maximal() const { return maximal_.size() == 1; }

    bool contains(const SubsetMask& v) const;

    /// Number of elements, by inclusion-exclusion over nonempty subfamilies
    /// of the maximal family.
    std::uint64_t size() const;

    bool is_empty_complex() const { return maximal_.empty(); }
    bool is_full() const;

    /// The character sum Σ_{v∈Δ} (−1)^{|v∩β|}, evaluated in closed form via
    /// inclusion-exclusion: Σ_{∅≠S⊆F} (−1)^{|S|+1} 2^{|∩S|} [β ∩ (∩S) = ∅].
    std::int64_t character_sum(const SubsetMask& beta) const;

    /// All elements in canonical order (m ≤ 20).
    std::vector<SubsetMask> elements() const;

    /// All of F_2^m not in the complex, canonical order (m ≤ 20).
    std::vector<SubsetMask> complement_elements() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    SimplicialComplex(int m, std::vector<SubsetMask> maximal)
        : m_(m), maximal_(std::move(maximal)) {}

    int m_ = 0;
    std::vector<SubsetMask> maximal_;
};

/// Σ over the complement: Σ_{v∉Δ} (−1)^{|v∩β|} = 2^m·[β=∅] − character_sum(Δ, β).
std::int64_t complement_character_sum(const SimplicialComplex& complex, const SubsetMask& beta);

}  // namespace fwc

#endif
