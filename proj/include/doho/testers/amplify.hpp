#pragma once

#include <cstddef>
#include <optional>

#include "doho/testers/string_testers.hpp"

namespace doho {

/// Repetitions that push a 1/3 error down to about 1/(100 x): the odd number
/// ceil(c ln(100 x)), at least 1. Pass x = s for an o(1/s) target and
/// x = s^2 for o(1/s^2).
std::size_t amplified_reps(double x, double c);

enum class Aggregation {
    kMajority,   ///< reject iff more than half of the runs reject
    kAnyReject,  ///< reject iff some run rejects (for one-sided testers)
};

Verdict amplified_test(const StringTester& tester, StringAccess& x, double eps,
                       std::size_t reps, Aggregation rule, Rng& rng);

/// Runs the corrector `votes` times and returns the bit that a strict
/// majority of the votes agree on, or nullopt.
std::optional<bool> majority_correct(const SelfCorrector& corrector, StringAccess& x,
                                     std::size_t i, std::size_t votes, Rng& rng);

}  // namespace doho
