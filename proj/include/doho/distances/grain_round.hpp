#pragma once

#include <cstddef>

#include "doho/core/distribution.hpp"

namespace doho {

/// Largest grain offset accepted by grain_round for object size n:
/// min(floor(log2 n), ceil(log2 log2 n) + 1).
std::size_t max_grain_offset(std::size_t n);

/// Distance bound floor(log2 n)/n + 2^-(floor(log2 n) - offset) met by
/// grain_round.
double grain_round_bound(std::size_t n, std::size_t offset);

/// Rounds P to a 2^(n - offset)-grained distribution: zero the last
/// floor(log2 n) bits of every string, floor each weight to a multiple of
/// 2^-(n - offset), and put the residual mass on 1^n.
///
/// Throws std::invalid_argument when n < 4, offset > max_grain_offset(n), or
/// n - offset > 62 (weights are handled as integer multiples of the grain).
FiniteDistribution grain_round(const FiniteDistribution& p, std::size_t offset);

}  // namespace doho
