#pragma once

#include <cstdint>
#include <vector>

#include "doho/core/distribution.hpp"
#include "doho/core/oracle.hpp"
#include "doho/core/rng.hpp"

namespace doho {

/// Sampling oracle over a tuple of one or two sources that bills every
/// distinct (handle, position) query.
///
/// Single-threaded: counters and the sampling engine are mutable state.
/// Samples are stored packed, so per-query work is a couple of word
/// operations.
class BilledOracle final : public SampleOracle {
public:
    BilledOracle(std::vector<SourcePtr> sources, std::uint64_t seed);
    BilledOracle(SourcePtr source, std::uint64_t seed);

    std::size_t n() const override { return n_; }
    std::size_t arity() const override { return sources_.size(); }
    std::vector<SampleHandle> draw(std::size_t which, std::size_t count) override;
    bool query(const SampleHandle& h, std::size_t position) override;
    Budget budget() const override { return {samples_drawn_, queries_}; }

    std::uint64_t id() const noexcept { return id_; }

private:
    std::size_t n_;
    std::size_t words_per_sample_;
    std::uint64_t id_;
    std::vector<SourcePtr> sources_;
    Rng rng_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint64_t> queried_;
    std::vector<std::size_t> samples_drawn_;
    std::size_t total_drawn_ = 0;
    std::size_t queries_ = 0;
};

}  // namespace doho
