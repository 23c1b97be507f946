#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"
#include "doho/std_testers/std_tester.hpp"
#include "doho/testers/constants.hpp"

namespace doho {

/// A sorted set J of 0-based positions and the restrictions x_J of the
/// samples read on it. Each (sample, j) is queried once.
class ProjectionContext {
public:
    /// Uniform ell-subset of {0..n-1}.
    ProjectionContext(std::size_t n, std::size_t ell, Rng& rng);
    /// Explicit J; must be strictly increasing and below n.
    ProjectionContext(std::size_t n, std::vector<std::size_t> positions);

    std::size_t n() const noexcept { return n_; }
    std::size_t ell() const noexcept { return positions_.size(); }
    const std::vector<std::size_t>& positions() const noexcept { return positions_; }

    const BitString& restrict(SampleOracle& oracle, const SampleHandle& h);
    /// Restrictions of all handles, in order.
    std::vector<BitString> restrict_all(SampleOracle& oracle,
                                        const std::vector<SampleHandle>& handles);
    /// Queries issued so far: ell per distinct sample.
    std::size_t queries() const noexcept { return cache_.size() * ell(); }

private:
    std::size_t n_;
    std::vector<std::size_t> positions_;
    std::map<std::pair<std::size_t, std::size_t>, BitString> cache_;
};

/// min(n, ceil(c eps^-1 ln(s / eps))), at least 1.
std::size_t lift_positions(std::size_t n, std::size_t s, double eps, double c);

/// Projection lifting of a label-invariant standard tester for a property
/// closed under mapping. Three blocks of s = inner.sample_complexity(n,
/// eps/2) samples, a fresh J per block with |J| = lift_positions(n, s, eps,
/// C4); each block feeds the zero-padded restrictions to inner at eps/2 and
/// the majority of the three verdicts is returned. Queries: 3 s |J|.
TesterReport project_lift_tester(SampleOracle& oracle, const StdTester& inner, double eps,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

}  // namespace doho
