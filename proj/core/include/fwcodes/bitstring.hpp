#ifndef FWCODES_BITSTRING_HPP
#define FWCODES_BITSTRING_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fwcodes/errors.hpp"

namespace fwc {

/// Fixed-length vector over F_2, packed 64 bits per word.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::size_t n) : n_(n), blocks_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (blocks_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value)
            blocks_[i / 64] |= mask;
        else
            blocks_[i / 64] &= ~mask;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : blocks_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : blocks_)
            if (w) return true;
        return false;
    }

    friend BitString operator^(const BitString& a, const BitString& b) {
        if (a.n_ != b.n_) throw DimensionError("bit string length mismatch");
        BitString r(a.n_);
        for (std::size_t i = 0; i < r.blocks_.size(); ++i) r.blocks_[i] = a.blocks_[i] ^ b.blocks_[i];
        return r;
    }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> blocks_;
};

inline std::size_t hamming_distance(const BitString& a, const BitString& b) {
    return (a ^ b).count();
}

}  // namespace fwc

#endif
