#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/bitstring.hpp"

namespace doho {

/// Binary linear code given by k generator rows of length n (k <= 12).
/// Message a encodes to the xor of the rows r with bit r of a set.
class LinearCode {
public:
    static constexpr std::size_t kMaxMessageBits = 12;

    /// Throws std::invalid_argument on ragged rows, k > 12 or a
    /// non-injective encoder.
    explicit LinearCode(std::vector<BitString> rows);

    std::size_t k() const noexcept { return rows_.size(); }
    std::size_t n() const noexcept { return n_; }
    const std::vector<BitString>& rows() const noexcept { return rows_; }
    /// Relative distance, measured over all nonzero codewords.
    double min_distance() const noexcept { return min_distance_; }

    BitString encode(std::uint64_t message) const;
    /// Message bit r is the r-th character of `message`.
    BitString encode(const BitString& message) const;
    /// All 2^k codewords, indexed by message.
    std::vector<BitString> codewords() const;

private:
    std::size_t n_;
    std::vector<BitString> rows_;
    double min_distance_ = 0;
};

/// n = 2^k; the codeword of a has bit <a, x> at position x.
LinearCode hadamard_code(std::size_t k);

/// Random generator matrix, redrawn until the relative distance reaches
/// `min_distance`. Throws std::runtime_error after `attempts` failures.
LinearCode random_linear_code(std::size_t k, std::size_t n, std::uint64_t seed,
                              double min_distance = 0.25, std::size_t attempts = 1000);

}  // namespace doho
