#pragma once

#include <cstddef>
#include <vector>

#include "doho/core/distribution.hpp"

namespace doho {

struct SupportDistance {
    double value = 0.0;
    std::vector<BitString> centers;         ///< at most m strings
    std::vector<std::size_t> cluster_of;    ///< per atom of P, index into centers
};

inline constexpr std::size_t kMaxSupportForPartition = 12;

/// EMD (relative Hamming) from P to the nearest distribution with support at
/// most m. Exhaustive over partitions of P's support into at most m clusters;
/// each cluster moves to its weighted coordinate-wise majority (ties to 0).
/// Throws std::invalid_argument when m == 0 or P has more than
/// kMaxSupportForPartition atoms.
SupportDistance dist_to_support_m(const FiniteDistribution& p, std::size_t m);

}  // namespace doho
