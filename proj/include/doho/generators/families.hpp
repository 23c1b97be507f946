#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/distribution.hpp"
#include "doho/generators/codes.hpp"

namespace doho {

/// m uniform strings, redrawn until every pair is at relative Hamming
/// distance >= min_distance. Throws std::invalid_argument when m > 2^n and
/// std::runtime_error after `attempts` failed draws.
std::vector<BitString> random_far_strings(std::size_t n, std::size_t m, double min_distance,
                                          std::uint64_t seed, std::size_t attempts = 10000);

/// Uniform distribution over random_far_strings(n, m, min_distance, seed).
FiniteDistribution uniform_random_subset(std::size_t n, std::size_t m, double min_distance,
                                         std::uint64_t seed, std::size_t attempts = 10000);

/// Y_S: uniform on S with probability 1/2, uniform on its complement
/// otherwise. Explicit, so n <= 16 (ComplementMixtureSource samples larger n).
FiniteDistribution ys_mixture(std::size_t n, const std::vector<BitString>& subset);

/// Push-forward of a distribution over k-bit messages through the encoder.
FiniteDistribution code_lift(const LinearCode& code, const FiniteDistribution& messages);

/// Renames the support with a seeded random injection into {0,1}^n,
/// keeping the weights. Collision patterns of samples are unchanged in law.
FiniteDistribution relabel(const FiniteDistribution& p, std::uint64_t seed);

}  // namespace doho
