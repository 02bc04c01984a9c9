#include "fwcodes/subsets.hpp"

#include <charconv>
#include <sstream>

namespace fwc {

void require_dim(int m) {
    if (m < 1 || m > kMaxAmbientDim) {
        throw PreconditionError("ambient dimension m must be in [1, " +
                                std::to_string(kMaxAmbientDim) + "], got " + std::to_string(m));
    }
}

void require_same_dim(const SubsetMask& x, const SubsetMask& y) {
    if (x.m != y.m) {
        throw DimensionError("ambient dimension mismatch: " + std::to_string(x.m) +
                             " vs " + std::to_string(y.m));
    }
}

SubsetMask empty_set(int m) {
    require_dim(m);
    return SubsetMask{0, m};
}

SubsetMask full_set(int m) {
    require_dim(m);
    return SubsetMask{(m == 32 ? ~0u : (1u << m) - 1u), m};
}

SubsetMask subset_from_bits(int m, std::uint32_t bits) {
    require_dim(m);
    if (bits >> m) {
        throw PreconditionError("mask has bits outside [1," + std::to_string(m) + "]");
    }
    return SubsetMask{bits, m};
}

SubsetMask subset_of(int m, const std::vector<int>& elements) {
    require_dim(m);
    std::uint32_t bits = 0;
    for (int e : elements) {
        if (e < 1 || e > m) {
            throw PreconditionError("element " + std::to_string(e) + " outside [1," +
                                    std::to_string(m) + "]");
        }
        bits |= 1u << (e - 1);
    }
    return SubsetMask{bits, m};
}

std::vector<SubsetMask> enumerate_subsets(int m) {
    require_dim(m);
    std::vector<SubsetMask> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        out.push_back(SubsetMask{bits, m});
    }
    return out;
}

std::string to_string(const SubsetMask& x) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e = 1; e <= x.m; ++e) {
        if (!x.contains(e)) continue;
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

SubsetMask parse_subset(int m, std::string_view text) {
    if (!text.empty() && text.front() == '{') {
        if (text.back() != '}') throw PreconditionError("unbalanced braces in subset literal");
        text.remove_prefix(1);
        text.remove_suffix(1);
    }
    std::vector<int> elements;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw PreconditionError("bad subset element '" + std::string(tok) + "'");
        }
        elements.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return subset_of(m, elements);
}

}  // namespace fwc
