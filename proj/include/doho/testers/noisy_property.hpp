#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/testers/constants.hpp"
#include "doho/testers/string_testers.hpp"

namespace doho {

/// Bit access to the ideal string behind a noisy distribution: the first
/// read of position i draws `votes` fresh samples, queries each at i and
/// returns the majority. Later reads of i reuse that answer.
class MajorityEmulation final : public StringAccess {
public:
    MajorityEmulation(SampleOracle& oracle, std::size_t votes);

    std::size_t n() const override { return cache_.size(); }
    bool bit(std::size_t i) override;
    /// Positions emulated so far; each cost `votes` samples and queries.
    std::size_t positions() const noexcept { return positions_; }
    std::size_t votes() const noexcept { return votes_; }

private:
    SampleOracle* oracle_;
    std::size_t votes_;
    std::vector<std::int8_t> cache_;
    std::size_t positions_ = 0;
};

/// Odd ceil(C11 ln(Q + 1)), Q = the string tester's query bound at eps / 2.
std::size_t emulation_votes(const StringTester& tester, std::size_t n, double eps,
                            const TesterConstants& c);

/// Noisy versions of members of Pi. Runs the perturbation tester at eps / 2;
/// if it accepts, runs `tester` once at eps / 2 on a MajorityEmulation.
/// Queries: the perturbation schedule plus votes times emulated positions.
TesterReport noisy_property_tester(SampleOracle& oracle, const StringTester& tester, double eta,
                                   double delta, double eps,
                                   const TesterConstants& constants = {},
                                   std::uint64_t seed = 0);

}  // namespace doho
