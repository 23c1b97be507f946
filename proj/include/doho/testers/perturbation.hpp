#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "json.hpp"

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"
#include "doho/testers/constants.hpp"

namespace doho {

struct PerturbationPlan {
    double eps = 0;                  ///< after the eta + 0.25 eps < 0.5 clamp
    std::size_t indices = 0;         ///< |I| = ceil(C8 eps^-2 ln(1/eps + 1))
    std::size_t estimate_samples = 0;  ///< ceil(C9 eps^-2 ln(|I| + 1))
    std::size_t check_samples = 0;   ///< ceil(C10 eps^-1 ln(1/eps + 1))
};

/// eps is lowered to 2 (0.5 - eta) when eta + 0.25 eps >= 0.5.
PerturbationPlan perturbation_plan(double eta, double delta, double eps,
                                   const TesterConstants& c);

/// Body of the perturbation tester; returns the verdict and adds the number
/// of queries it issued to *queries.
Verdict perturbation_run(SampleOracle& oracle, double eta, double delta, double eps,
                         const TesterConstants& constants, Rng& rng, nlohmann::json& trace,
                         std::size_t* queries);

/// Membership in the union over x* of D^per_{eta,delta}(x*): every bit of x*
/// flipped with probability at most eta, and never more than delta n bits.
///   1. I: |I| positions drawn with replacement;
///   2. estimate Pr[X_i = 1] on each distinct i in I from shared samples;
///      reject if an estimate lies in [eta + 0.2 eps, 1 - eta - 0.2 eps],
///      else x^_i = [estimate > eta + 0.2 eps];
///   3. reject if some checked sample disagrees with x^ on more than
///      (delta + 0.1 eps) |I| entries of I (counted with multiplicity).
/// Queries: d * estimate_samples, plus d * check_samples when step 3 runs,
/// where d is the number of distinct positions in I.
TesterReport perturbation_tester(SampleOracle& oracle, double eta, double delta, double eps,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

}  // namespace doho
