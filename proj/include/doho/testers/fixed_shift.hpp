#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"
#include "doho/testers/constants.hpp"

namespace doho {

/// Throws std::invalid_argument unless `law` is a probability vector of
/// length n with law == law shifted by i (mod n) for every i in its support.
void validate_shift_law(const std::vector<double>& law, std::size_t n);

std::vector<double> uniform_shift_law(std::size_t n);

/// Arity-2 view of an arity-1 oracle: distribution 0 is X itself, and
/// distribution 1 is the law-shifted copy of one sample x1 of X drawn at
/// construction. Querying a Y sample with shift sigma at position i reads
/// x1 at (i + sigma) mod n. budget() is the underlying oracle's.
class ShiftedCopyOracle final : public SampleOracle {
public:
    ShiftedCopyOracle(SampleOracle& base, std::vector<double> law, Rng& rng);

    std::size_t n() const override { return base_->n(); }
    std::size_t arity() const override { return 2; }
    std::vector<SampleHandle> draw(std::size_t which, std::size_t count) override;
    bool query(const SampleHandle& h, std::size_t position) override;
    Budget budget() const override { return base_->budget(); }

    const SampleHandle& reference() const noexcept { return x1_; }
    const std::vector<std::size_t>& shifts() const noexcept { return shifts_; }

private:
    SampleOracle* base_;
    std::vector<double> cumulative_;
    Rng* rng_;
    SampleHandle x1_;
    std::vector<std::size_t> shifts_;
};

/// X equals the law-shifted copies of one of its samples (uniform law by
/// default). The law is validated first. Runs the equality pair tester with
/// m = n and one bounded side on the ShiftedCopyOracle. Queries: a |J| on
/// the X samples plus |union over Y samples of (J + sigma) mod n| on x1.
TesterReport fixed_shift_dist_tester(SampleOracle& oracle, double eps,
                                     std::vector<double> shift_law = {},
                                     const TesterConstants& constants = {},
                                     std::uint64_t seed = 0);

}  // namespace doho
