#pragma once

#include <string_view>

#include "doho/core/bitstring.hpp"
#include "doho/core/distribution.hpp"

namespace doho {

/// Ground metric between two strings of equal length.
enum class GroundMetric {
    kRelativeHamming,  ///< fraction of differing positions
    kInequality,       ///< 1 if the strings differ, else 0
};

std::string_view to_string(GroundMetric g) noexcept;

/// |{i : x_i != y_i}| / n. Throws std::invalid_argument on a length mismatch.
double hamming_rel(const BitString& x, const BitString& y);

double ground_distance(GroundMetric g, const BitString& x, const BitString& y);

/// Total variation distance, half the l1 distance of the weight functions.
double tv(const FiniteDistribution& p, const FiniteDistribution& q);

}  // namespace doho
