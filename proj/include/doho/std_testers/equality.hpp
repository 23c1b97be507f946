#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "json.hpp"

#include "doho/core/bitstring.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"

namespace doho {

inline constexpr double kDefaultEqualityRate = 10.0;

/// Poisson mean per side: c * max(eps^-4/3 m^2/3, eps^-2 m^1/2).
double equality_rate(std::size_t m, double eps, double c = kDefaultEqualityRate);

/// Acceptance threshold lambda^2 eps^2 / (2m): half the smallest far-case
/// mean of Z when one side has support at most m and the TV distance
/// exceeds eps.
double equality_threshold(std::size_t m, double eps, double lambda);

/// Z = sum over values v of (a_v - b_v)^2 - a_v - b_v.
double equality_statistic(std::span<const BitString> a, std::span<const BitString> b);

/// Independent Poisson(lambda) sample counts for the two sides.
std::pair<std::size_t, std::size_t> poissonized_counts(Rng& rng, double lambda);

/// Accepts iff Z < tau. Both sample sequences must be non-empty; their
/// lengths are expected to be Poissonized with mean equality_rate(m, eps, c).
Verdict std_equality_tester(std::span<const BitString> a, std::span<const BitString> b,
                            std::size_t m, double eps, double c = kDefaultEqualityRate,
                            nlohmann::json* trace = nullptr);

}  // namespace doho
