#pragma once

#include <cstddef>
#include <cstdint>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/testers/constants.hpp"

namespace doho {

/// Samples and positions of doho_support_tester.
std::size_t support_samples(std::size_t m, double eps, const TesterConstants& c);
std::size_t support_positions(std::size_t n, std::size_t m, double eps,
                              const TesterConstants& c);

/// Support size at most m. One J with |J| = min(n, ceil(C6 eps^-1 ln(m+1))),
/// s = ceil(C5 m / eps) samples; accepts iff the restrictions take at most m
/// distinct values. One-sided. trace["vacuous"] is true when m >= 2^|J|,
/// where acceptance is forced.
TesterReport doho_support_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

/// m-grained: projection lifting of StdGrainedTester(m, C1, C2).
TesterReport doho_grained_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

/// Uniform over some m-subset. When eps > 2 ceil(log2 m) / n this is
/// doho_grained_tester(m, eps / 2). Otherwise samples are read in full and
/// StdGrainedTester(m) decides at eps / 2 (trace["path"] == "full_read").
TesterReport doho_uniform_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

}  // namespace doho
