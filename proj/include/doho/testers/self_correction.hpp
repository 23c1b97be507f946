#pragma once

#include <cstddef>
#include <cstdint>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/std_testers/std_tester.hpp"
#include "doho/testers/constants.hpp"
#include "doho/testers/string_testers.hpp"

namespace doho {

/// Label-invariant property of distributions supported on a self-correctable
/// code Pi. With eps' = min(eps, delta) and s = inner.sample_complexity(n,
/// eps'/2), draws max(s, t1) samples, t1 = ceil(2 C15 / eps'):
///   1. dpi check on the first t1 samples at eps'/2, using SpotCheckTester;
///   2. pi_tester at proximity delta on each of the s samples, repeated
///      amplified_reps(s, C16) times;
///   3. a common random set I of min(n, ceil(C17 delta^-1 ln s)) positions;
///      each sample passes pi_tester again (amplified_reps(s^2, C16) runs)
///      and is corrected on I by strict majority over amplified_reps(s^2,
///      C16) corrector votes. Any refusal rejects; otherwise inner decides on
///      the zero-padded corrected restrictions at eps'/2.
/// delta defaults to the corrector's radius.
TesterReport self_correction_tester(SampleOracle& oracle, const StringTester& pi_tester,
                                    const SelfCorrector& corrector, const StdTester& inner,
                                    double eps, double delta = 0,
                                    const TesterConstants& constants = {},
                                    std::uint64_t seed = 0);

}  // namespace doho
