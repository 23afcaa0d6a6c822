#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "hypdom/error.hpp"

namespace hypdom {

/// Exact binomial coefficient C(n, r); r > n yields 0. Throws Overflow if the
/// result does not fit in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        // result * factor is divisible by i: it equals C(n-r+i, i) * i. The
        // running value is monotone, so checking each step suffices.
        unsigned __int128 wide = static_cast<unsigned __int128>(result) * (n - r + i) / i;
        if (wide > std::numeric_limits<std::uint64_t>::max())
            fail(Errc::Overflow, "binomial(" + std::to_string(n) + "," + std::to_string(r) +
                                     ") exceeds 64 bits");
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

/// Visits every r-subset of [0, n) in colexicographic order (compare largest
/// element first). The callback receives the subset as a sorted vector.
template <class F>
void for_each_colex_subset(std::size_t n, std::size_t r, F&& f) {
    if (r > n) return;
    std::vector<std::size_t> c(r);
    std::iota(c.begin(), c.end(), std::size_t{0});
    for (;;) {
        f(const_cast<const std::vector<std::size_t>&>(c));
        // Smallest i with room to grow: c[i] + 1 < next bound.
        std::size_t i = 0;
        while (i < r) {
            std::size_t bound = (i + 1 < r) ? c[i + 1] : n;
            if (c[i] + 1 < bound) break;
            ++i;
        }
        if (i == r) return;
        ++c[i];
        std::iota(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
    }
}

/// Position of a sorted r-subset in the colexicographic enumeration.
inline std::uint64_t colex_rank(const std::vector<std::size_t>& subset) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) rank += binomial(subset[i], i + 1);
    return rank;
}

}  // namespace hypdom
