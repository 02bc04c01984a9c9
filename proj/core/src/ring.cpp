#include "fwcodes/ring.hpp"

namespace fwc {

std::string to_string(RingElement x) {
    if (x.a && x.b) return "1+u";
    if (x.a) return "1";
    if (x.b) return "u";
    return "0";
}

RingVector ring_vector(const SubsetMask& alpha, const SubsetMask& beta) {
    require_same_dim(alpha, beta);
    return RingVector{alpha, beta};
}

RingVector zero_vector(int m) {
    return RingVector{empty_set(m), empty_set(m)};
}

BitString gray(const RingVector& x) {
    const int m = x.dim();
    BitString out(2 * static_cast<std::size_t>(m));
    const std::uint32_t sum = x.alpha.bits ^ x.beta.bits;
    for (int i = 0; i < m; ++i) {
        if ((x.beta.bits >> i) & 1u) out.set(i, true);
        if ((sum >> i) & 1u) out.set(m + i, true);
    }
    return out;
}

}  // namespace fwc
