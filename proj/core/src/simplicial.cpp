#include "fwcodes/simplicial.hpp"

#include <algorithm>

namespace fwc {

SimplicialComplex SimplicialComplex::from_maximal(int m, std::vector<SubsetMask> candidates) {
    require_dim(m);
    for (const auto& c : candidates) {
        if (c.m != m) {
            throw DimensionError("maximal element lives in dimension " + std::to_string(c.m) +
                                 ", complex in " + std::to_string(m));
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const SubsetMask& a, const SubsetMask& b) { return a.bits < b.bits; });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<SubsetMask> antichain;
    for (const auto& c : candidates) {
        bool dominated = false;
        for (const auto& other : candidates) {
            if (other.bits != c.bits && c.subset_of(other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) antichain.push_back(c);
    }
    if (antichain.size() > static_cast<std::size_t>(kMaxMaximalElements)) {
        throw PreconditionError("more than " + std::to_string(kMaxMaximalElements) +
                                " maximal elements");
    }
    return SimplicialComplex(m, std::move(antichain));
}

SimplicialComplex SimplicialComplex::generated_by(const SubsetMask& face) {
    return from_maximal(face.m, {face});
}

SimplicialComplex SimplicialComplex::full(int m) {
    return from_maximal(m, {full_set(m)});
}

SimplicialComplex SimplicialComplex::empty(int m) {
    return from_maximal(m, {});
}

bool SimplicialComplex::contains(const SubsetMask& v) const {
    if (v.m != m_) throw DimensionError("membership query in wrong dimension");
    for (const auto& f : maximal_) {
        if (v.subset_of(f)) return true;
    }
    return false;
}

std::uint64_t SimplicialComplex::size() const {
    const std::size_t l = maximal_.size();
    std::int64_t total = 0;
    for (std::uint32_t s = 1; s < (1u << l); ++s) {
        std::uint32_t inter = full_set(m_).bits;
        for (std::size_t i = 0; i < l; ++i) {
            if ((s >> i) & 1u) inter &= maximal_[i].bits;
        }
        const std::int64_t term = std::int64_t{1} << std::popcount(inter);
        total += (std::popcount(s) % 2 == 1) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

bool SimplicialComplex::is_full() const {
    return size() == (std::uint64_t{1} << m_);
}

std::int64_t SimplicialComplex::character_sum(const SubsetMask& beta) const {
    if (beta.m != m_) throw DimensionError("character_sum argument in wrong dimension");
    const std::size_t l = maximal_.size();
    std::int64_t total = 0;
    for (std::uint32_t s = 1; s < (1u << l); ++s) {
        std::uint32_t inter = full_set(m_).bits;
        for (std::size_t i = 0; i < l; ++i) {
            if ((s >> i) & 1u) inter &= maximal_[i].bits;
        }
        if (beta.bits & inter) continue;  // a factor (1 + (−1)) vanishes
        const std::int64_t term = std::int64_t{1} << std::popcount(inter);
        total += (std::popcount(s) % 2 == 1) ? term : -term;
    }
    return total;
}

std::vector<SubsetMask> SimplicialComplex::elements() const {
    if (m_ > kMaxEnumerationDim) {
        throw PreconditionError("element enumeration capped at m ≤ " +
                                std::to_string(kMaxEnumerationDim));
    }
    std::vector<SubsetMask> out;
    for (std::uint32_t bits = 0; bits < (1u << m_); ++bits) {
        SubsetMask v{bits, m_};
        if (contains(v)) out.push_back(v);
    }
    return out;
}

std::vector<SubsetMask> SimplicialComplex::complement_elements() const {
    if (m_ > kMaxEnumerationDim) {
        throw PreconditionError("element enumeration capped at m ≤ " +
                                std::to_string(kMaxEnumerationDim));
    }
    std::vector<SubsetMask> out;
    for (std::uint32_t bits = 0; bits < (1u << m_); ++bits) {
        SubsetMask v{bits, m_};
        if (!contains(v)) out.push_back(v);
    }
    return out;
}

std::int64_t complement_character_sum(const SimplicialComplex& complex, const SubsetMask& beta) {
    const std::int64_t whole =
        beta.empty() ? (std::int64_t{1} << complex.ambient_dim()) : 0;
    return whole - complex.character_sum(beta);
}

}  // namespace fwc
