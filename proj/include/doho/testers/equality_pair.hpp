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

/// Which supports are declared to be at most m.
enum class SupportBound {
    kBothSides,  ///< inner proximity 0.3 eps
    kOneSide,    ///< inner proximity 0.25 eps
};

double equality_inner_proximity(double eps, SupportBound bound);

/// min(n, ceil(C7 eps^-1 ln(m+1))), at least 1.
std::size_t equality_positions(std::size_t n, std::size_t m, double eps,
                               const TesterConstants& c);

struct EqualityPairRun {
    Verdict verdict = Verdict::kAccept;
    std::size_t samples_x = 0;
    std::size_t samples_y = 0;
    std::vector<std::size_t> positions;
    std::vector<SampleHandle> handles_y;
};

/// The tester body on an arity-2 oracle, writing its diagnostics to `trace`.
EqualityPairRun equality_pair_run(SampleOracle& oracle, std::size_t m, double eps,
                                  SupportBound bound, const TesterConstants& constants, Rng& rng,
                                  nlohmann::json& trace);

/// X = distribution 0, Y = distribution 1 of the oracle. Draws max(1,
/// Poisson(lambda)) samples per side with lambda = equality_rate(m, eps_in,
/// C3), eps_in = equality_inner_proximity(eps, bound); reads each on one
/// random J of size equality_positions(n, m, eps) and runs
/// std_equality_tester on the restrictions at eps_in. Queries: (a + b) |J|.
TesterReport equality_pair_tester(SampleOracle& oracle, std::size_t m, double eps,
                                  SupportBound bound = SupportBound::kBothSides,
                                  const TesterConstants& constants = {},
                                  std::uint64_t seed = 0);

}  // namespace doho
