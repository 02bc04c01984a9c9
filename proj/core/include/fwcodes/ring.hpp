#ifndef FWCODES_RING_HPP
#define FWCODES_RING_HPP

#include <cstdint>
#include <string>

#include "fwcodes/bitstring.hpp"
#include "fwcodes/subsets.hpp"

namespace fwc {

/// An element a + u·b of R = F_2 + uF_2 with u² = 0.
struct RingElement {
    bool a = false;
    bool b = false;

    bool is_zero() const { return !a && !b; }
    friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline RingElement ring_add(RingElement x, RingElement y) {
    return RingElement{static_cast<bool>(x.a ^ y.a), static_cast<bool>(x.b ^ y.b)};
}

// (a+ub)(c+ud) = ac + u(ad+bc); the u² term vanishes.
inline RingElement ring_mul(RingElement x, RingElement y) {
    return RingElement{static_cast<bool>(x.a & y.a),
                       static_cast<bool>((x.a & y.b) ^ (x.b & y.a))};
}

/// Lee weight of one ring element: w_H(b) + w_H(a+b), so 0 ↦ 0, 1 ↦ 1,
/// u ↦ 2, 1+u ↦ 1.
inline int lee_weight(RingElement x) { return int(x.b) + int(x.a ^ x.b); }

/// One of "0", "1", "u", "1+u".
std::string to_string(RingElement x);

/// A vector alpha + u·beta in R^m, stored as the pair of F_2^m masks.
struct RingVector {
    SubsetMask alpha;
    SubsetMask beta;

    int dim() const { return alpha.m; }
    bool is_zero() const { return alpha.empty() && beta.empty(); }
    friend bool operator==(const RingVector&, const RingVector&) = default;
};

RingVector ring_vector(const SubsetMask& alpha, const SubsetMask& beta);
RingVector zero_vector(int m);

inline RingVector ring_add(const RingVector& x, const RingVector& y) {
    return RingVector{sym_diff(x.alpha, y.alpha), sym_diff(x.beta, y.beta)};
}

/// u·(alpha + u·beta) = u·alpha.
inline RingVector times_u(const RingVector& x) {
    return RingVector{empty_set(x.dim()), x.alpha};
}

/// Euclidean inner product Σ x_i y_i in R. For x = α+uβ and y = t₁+ut₂ this
/// is (α·t₁) + u(α·t₂ + β·t₁) with · the F_2 dot product.
inline RingElement inner_product(const RingVector& x, const RingVector& y) {
    require_same_dim(x.alpha, y.alpha);
    return RingElement{dot_parity(x.alpha, y.alpha),
                       static_cast<bool>(dot_parity(x.alpha, y.beta) ^
                                         dot_parity(x.beta, y.alpha))};
}

/// Gray image of a + u·b: the 2m-bit vector (b, a+b), u-part block first.
/// Bit i holds b_{i+1}; bit m+i holds (a+b)_{i+1}.
BitString gray(const RingVector& x);

/// w_H(b) + w_H(a+b); equals the Hamming weight of gray(x).
inline int lee_weight(const RingVector& x) {
    return x.beta.size() + sym_diff(x.alpha, x.beta).size();
}

inline int lee_distance(const RingVector& x, const RingVector& y) {
    return lee_weight(ring_add(x, y));  // subtraction = addition in characteristic 2
}

}  // namespace fwc

#endif
