#include "doho/testers/self_correction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doho/core/rng.hpp"
#include "doho/testers/amplify.hpp"
#include "doho/testers/dpi.hpp"

namespace doho {

TesterReport self_correction_tester(SampleOracle& oracle, const StringTester& pi_tester,
                                    const SelfCorrector& corrector, const StdTester& inner,
                                    double eps, double delta, const TesterConstants& constants,
                                    std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("self_correction: eps must be positive");
    if (delta <= 0) delta = corrector.radius();
    const std::size_t n = oracle.n();
    const double eps1 = std::min(eps, delta);
    const double inner_eps = eps1 / 2;
    const std::size_t s = inner.sample_complexity(n, inner_eps);
    const auto t1 = static_cast<std::size_t>(std::ceil(constants.dpi_samples / inner_eps));
    const double sd = static_cast<double>(s);
    const std::size_t step2_reps = amplified_reps(sd, constants.amplification);
    const std::size_t combined_reps = amplified_reps(sd * sd, constants.amplification);
    const auto ell = std::clamp<std::size_t>(
        static_cast<std::size_t>(
            std::ceil(constants.correction_positions * std::log(std::max(sd, 2.0)) / delta)),
        1, n);
    const Aggregation rule =
        pi_tester.one_sided() ? Aggregation::kAnyReject : Aggregation::kMajority;

    Rng rng(seed);
    nlohmann::json trace;
    trace["eps_effective"] = eps1;
    trace["delta"] = delta;
    trace["samples"] = s;
    trace["step1_samples"] = t1;
    trace["ell"] = ell;

    // Samples are drawn on first use, so an early reject leaves none unread.
    std::vector<SampleAccess> xs;
    auto sample = [&](std::size_t k) -> SampleAccess& {
        while (xs.size() <= k) xs.emplace_back(oracle, oracle.draw(0, 1).front());
        return xs[k];
    };
    auto done = [&](Verdict v, int step) {
        trace["decided_at_step"] = step;
        return finish_report(oracle, v, tally_queries(xs), std::move(trace));
    };

    // Step 1
    {
        const SpotCheckTester spot(pi_tester, corrector, combined_reps);
        const std::size_t votes = dpi_votes(inner_eps, constants);
        for (std::size_t k = 0; k < t1; ++k) {
            if (amplified_test(spot, sample(k), inner_eps / 2, votes, Aggregation::kMajority, rng) ==
                Verdict::kReject) {
                trace["rejected_sample"] = k;
                return done(Verdict::kReject, 1);
            }
        }
    }
    // Step 2
    for (std::size_t k = 0; k < s; ++k) {
        if (amplified_test(pi_tester, sample(k), delta, step2_reps, rule, rng) == Verdict::kReject) {
            trace["rejected_sample"] = k;
            return done(Verdict::kReject, 2);
        }
    }
    // Step 3
    const auto positions = rng.subset(n, ell);
    trace["I"] = positions;
    std::vector<BitString> corrected;
    corrected.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        if (amplified_test(pi_tester, sample(k), delta, combined_reps, rule, rng) ==
            Verdict::kReject) {
            trace["rejected_sample"] = k;
            return done(Verdict::kReject, 3);
        }
        BitString y(n);
        for (std::size_t j = 0; j < ell; ++j) {
            const auto b = majority_correct(corrector, xs[k], positions[j], combined_reps, rng);
            if (!b) {
                trace["rejected_sample"] = k;
                return done(Verdict::kReject, 3);
            }
            y.set(j, *b);
        }
        corrected.push_back(std::move(y));
    }
    nlohmann::json inner_trace = nlohmann::json::object();
    const Verdict v = inner.decide(corrected, inner_eps, &inner_trace);
    trace["inner"] = inner_trace;
    return done(v, 3);
}

}  // namespace doho
