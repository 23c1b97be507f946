#include "doho/testers/amplify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doho {

std::size_t amplified_reps(double x, double c) {
    if (!(c > 0)) throw std::invalid_argument("amplified_reps: c must be positive");
    const double target = 100.0 * std::max(x, 1.0);
    auto reps = static_cast<std::size_t>(std::ceil(c * std::log(target)));
    reps = std::max<std::size_t>(reps, 1);
    if (reps % 2 == 0) ++reps;
    return reps;
}

Verdict amplified_test(const StringTester& tester, StringAccess& x, double eps,
                       std::size_t reps, Aggregation rule, Rng& rng) {
    if (reps == 0) throw std::invalid_argument("amplified_test: reps must be positive");
    std::size_t rejects = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        if (tester.test(x, eps, rng) == Verdict::kReject) {
            if (rule == Aggregation::kAnyReject) return Verdict::kReject;
            ++rejects;
        }
    }
    return 2 * rejects > reps ? Verdict::kReject : Verdict::kAccept;
}

std::optional<bool> majority_correct(const SelfCorrector& corrector, StringAccess& x,
                                     std::size_t i, std::size_t votes, Rng& rng) {
    std::size_t ones = 0;
    std::size_t zeros = 0;
    for (std::size_t v = 0; v < votes; ++v) {
        const auto b = corrector.correct(x, i, rng);
        if (!b) continue;
        (*b ? ones : zeros) += 1;
    }
    if (2 * ones > votes) return true;
    if (2 * zeros > votes) return false;
    return std::nullopt;
}

}  // namespace doho
