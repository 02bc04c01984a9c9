#include "fwcodes/optimality.hpp"

#include <bit>
#include <string>

#include "fwcodes/errors.hpp"

namespace fwc {

BinaryParams::BinaryParams(std::uint64_t n, int k, std::uint64_t d) : n(n), k(k), d(d) {
    if (k < 1) throw PreconditionError("BinaryParams: dimension must be at least 1");
    if (d < 1 || d > n)
        throw PreconditionError("BinaryParams: minimum distance must satisfy 1 <= d <= n");
}

std::uint64_t griesmer_sum(int k, std::uint64_t d) {
    if (k < 1) throw PreconditionError("griesmer_sum: dimension must be at least 1");
    if (d < 1) throw PreconditionError("griesmer_sum: distance must be at least 1");
    std::uint64_t sum = 0;
    std::uint64_t div = 1;
    for (int i = 0; i < k; ++i) {
        if (div >= d) {
            sum += static_cast<std::uint64_t>(k - i);  // remaining terms are all 1
            break;
        }
        sum += (d + div - 1) / div;
        div <<= 1;
    }
    return sum;
}

bool meets_griesmer(const BinaryParams& params) {
    return griesmer_sum(params.k, params.d) == params.n;
}

bool distance_optimal_by_griesmer(const BinaryParams& params) {
    return griesmer_sum(params.k, params.d + 1) > params.n;
}

OptimalityReport assess(const BinaryParams& params) {
    OptimalityReport report;
    report.params = params;
    report.griesmer_sum_d = griesmer_sum(params.k, params.d);
    report.griesmer_sum_d_plus_1 = griesmer_sum(params.k, params.d + 1);
    report.meets_griesmer = report.griesmer_sum_d == params.n;
    report.distance_optimal_griesmer = report.griesmer_sum_d_plus_1 > params.n;
    return report;
}

BinaryParams binary_params_from_distribution(const WeightDistribution& message_distribution,
                                             std::uint64_t ring_length) {
    if (ring_length == 0) throw PreconditionError("binary_params_from_distribution: empty code");
    const std::uint64_t kernel = message_distribution.frequency(0);
    if (kernel == 0)
        throw PreconditionError(
            "binary_params_from_distribution: distribution lacks the zero codeword");
    const std::uint64_t total = message_distribution.total();
    if (total % kernel != 0)
        throw InternalError("binary_params_from_distribution: kernel size " +
                            std::to_string(kernel) + " does not divide the message count " +
                            std::to_string(total));
    const std::uint64_t size = total / kernel;
    if (!std::has_single_bit(size))
        throw InternalError("binary_params_from_distribution: code size " + std::to_string(size) +
                            " is not a power of two");
    const int k = std::bit_width(size) - 1;
    if (k == 0)
        throw PreconditionError("binary_params_from_distribution: the code is the zero code");
    return BinaryParams(2 * ring_length, k, message_distribution.min_nonzero_weight());
}

OptimalityReport certify(const WeightDistribution& message_distribution,
                         std::uint64_t ring_length, std::uint64_t kernel_size) {
    if (message_distribution.frequency(0) != kernel_size)
        throw PreconditionError("certify: kernel size " + std::to_string(kernel_size) +
                                " does not equal the weight-0 frequency " +
                                std::to_string(message_distribution.frequency(0)));
    return assess(binary_params_from_distribution(message_distribution, ring_length));
}

}  // namespace fwc
