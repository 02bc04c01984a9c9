#ifndef FWCODES_OPTIMALITY_HPP
#define FWCODES_OPTIMALITY_HPP

#include <cstdint>

#include "fwcodes/codes.hpp"

namespace fwc {

/// Parameters [n, k, d] of a binary linear code.
struct BinaryParams {
    std::uint64_t n = 0;
    int k = 0;
    std::uint64_t d = 0;

    BinaryParams() = default;
    BinaryParams(std::uint64_t n, int k, std::uint64_t d);

    friend bool operator==(const BinaryParams&, const BinaryParams&) = default;
};

/// Σ_{i=0}^{k-1} ⌈d / 2^i⌉, the Griesmer lower bound on the length of a
/// binary [n, k, d] code.
std::uint64_t griesmer_sum(int k, std::uint64_t d);

/// n equals the Griesmer bound for (k, d).
bool meets_griesmer(const BinaryParams& params);

/// No binary [n, k, d+1] code exists by the Griesmer bound, so d is the best
/// minimum distance at this length and dimension.
bool distance_optimal_by_griesmer(const BinaryParams& params);

struct OptimalityReport {
    BinaryParams params;
    std::uint64_t griesmer_sum_d = 0;
    std::uint64_t griesmer_sum_d_plus_1 = 0;
    bool meets_griesmer = false;
    bool distance_optimal_griesmer = false;
};

OptimalityReport assess(const BinaryParams& params);

/// Binary parameters of the Gray image, read off the message-indexed Lee
/// distribution without materializing codewords: n = 2|L|, the code size is
/// total/kernel where the kernel size is the weight-0 frequency, and d is
/// the least nonzero Lee weight (the Gray map is a weight-preserving
/// bijection). The code size must be a power of two.
BinaryParams binary_params_from_distribution(const WeightDistribution& message_distribution,
                                             std::uint64_t ring_length);

/// Full report for the Gray image described by a message-indexed Lee
/// distribution. `kernel_size` is validated against the weight-0 frequency
/// of the distribution before anything is derived from it.
OptimalityReport certify(const WeightDistribution& message_distribution,
                         std::uint64_t ring_length, std::uint64_t kernel_size);

}  // namespace fwc

#endif
