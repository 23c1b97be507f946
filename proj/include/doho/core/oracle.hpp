#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "doho/core/bitstring.hpp"

namespace doho {

/// Opaque reference to one drawn sample.
struct SampleHandle {
    std::uint64_t oracle_id = 0;
    std::size_t which = 0;  ///< index of the distribution the sample came from
    std::size_t index = 0;  ///< draw index within the issuing oracle

    friend bool operator==(const SampleHandle&, const SampleHandle&) = default;
};

/// Resource counters: samples per distribution and billed bit-queries.
struct Budget {
    std::vector<std::size_t> samples;
    std::size_t queries = 0;

    std::size_t total_samples() const noexcept {
        std::size_t total = 0;
        for (auto s : samples) total += s;
        return total;
    }
    friend bool operator==(const Budget&, const Budget&) = default;
};

/// The only view of a tested distribution that testers get: draw samples,
/// then read them one bit at a time. Repeated queries to the same
/// (handle, position) are billed once.
class SampleOracle {
public:
    virtual ~SampleOracle() = default;

    /// Object size n of every sample.
    virtual std::size_t n() const = 0;
    /// Number of distributions in the tuple (1 or 2).
    virtual std::size_t arity() const = 0;
    /// Draws `count` i.i.d. samples from distribution `which`. Throws
    /// std::invalid_argument when count == 0 or `which` is out of range.
    virtual std::vector<SampleHandle> draw(std::size_t which, std::size_t count) = 0;
    /// Bit `position` (0-based) of the sample behind `h`. Throws
    /// std::out_of_range for a bad position and std::invalid_argument for a
    /// handle issued by another oracle.
    virtual bool query(const SampleHandle& h, std::size_t position) = 0;
    virtual Budget budget() const = 0;
};

/// Queries `h` at each position in order; the result has one bit per position.
BitString query_restriction(SampleOracle& oracle, const SampleHandle& h,
                            std::span<const std::size_t> positions);

/// Reads the whole sample (n queries).
BitString query_all(SampleOracle& oracle, const SampleHandle& h);

}  // namespace doho
