#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"
#include "doho/testers/constants.hpp"
#include "doho/testers/string_testers.hpp"

namespace doho {

enum class DpiMode { kPlain, kLevin };

struct DpiLevel {
    std::size_t samples = 0;
    double proximity = 0;
};

/// Plain mode: one level of ceil(C15 / eps) samples at proximity eps / 2.
/// Levin mode: levels i = 1..ceil(log2(16 / eps)) with
/// ceil(C15 (i+1)^2 2^i / 16) samples at proximity min(2^(i-3) eps, 1).
std::vector<DpiLevel> dpi_schedule(double eps, DpiMode mode, const TesterConstants& c);

/// Runs per sample test: the odd number ceil(C16 ln(1/eps + 1)), at least 1.
std::size_t dpi_votes(double eps, const TesterConstants& c);

/// Tests each sample with `votes` runs of `tester` at `proximity`, majority
/// per sample. Returns the index of the first sample whose majority rejects,
/// or -1.
long dpi_check(std::vector<SampleAccess>& samples, const StringTester& tester, double proximity,
               std::size_t votes, Rng& rng);

/// Support inside the string property Pi tested by `tester`. Accepts iff no
/// sample's majority rejects; one-sided when `tester` is. Queries are the
/// tester's own tally of distinct positions read per sample.
TesterReport dpi_tester(SampleOracle& oracle, const StringTester& tester, double eps,
                        DpiMode mode = DpiMode::kPlain, const TesterConstants& constants = {},
                        std::uint64_t seed = 0);

/// Sum of distinct positions read over all samples.
std::size_t tally_queries(const std::vector<SampleAccess>& samples);

}  // namespace doho
