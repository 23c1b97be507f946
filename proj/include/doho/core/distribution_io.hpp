#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "doho/core/distribution.hpp"

namespace doho {

/// Malformed or invalid distribution text (bad header, bad atom line, weights
/// not summing to 1 within kFileWeightTolerance).
class DistributionFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kFileWeightTolerance = 1e-9;

/// Text format:
///
///     n <int>
///     <bitstring> <decimal weight>
///     ...
///
/// Blank lines and lines starting with '#' are ignored. Weights within 1e-9
/// of summing to one are rescaled to sum exactly to one.
FiniteDistribution read_distribution(std::istream& in);
FiniteDistribution load_distribution(const std::filesystem::path& path);

/// Writes atoms in stored order with round-trip precision.
void write_distribution(std::ostream& out, const FiniteDistribution& dist);
void save_distribution(const std::filesystem::path& path, const FiniteDistribution& dist);

}  // namespace doho
