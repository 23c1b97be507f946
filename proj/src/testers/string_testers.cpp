#include "doho/testers/string_testers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "doho/testers/amplify.hpp"

namespace doho {

namespace {

std::size_t rounds_for(double c, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("string tester: eps must be positive");
    return static_cast<std::size_t>(std::ceil(c / std::min(eps, 1.0)));
}

}  // namespace

SampleAccess::SampleAccess(SampleOracle& oracle, SampleHandle handle)
    : oracle_(&oracle), handle_(handle), cache_(oracle.n(), -1) {}

bool SampleAccess::bit(std::size_t i) {
    if (i >= cache_.size()) throw std::out_of_range("SampleAccess: position out of range");
    if (cache_[i] < 0) {
        cache_[i] = oracle_->query(handle_, i) ? 1 : 0;
        ++distinct_;
    }
    return cache_[i] == 1;
}

std::size_t LinearityTester::rounds(double eps) const { return rounds_for(c_, eps); }

std::size_t LinearityTester::query_bound(std::size_t, double eps) const {
    return 3 * rounds(eps);
}

Verdict LinearityTester::test(StringAccess& x, double eps, Rng& rng) const {
    const std::size_t n = x.n();
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("linearity: n must be a power of two");
    }
    const std::size_t r = rounds(eps);
    for (std::size_t t = 0; t < r; ++t) {
        const std::size_t a = rng.below(n);
        const std::size_t b = rng.below(n);
        if ((x.bit(a) ^ x.bit(b)) != x.bit(a ^ b)) return Verdict::kReject;
    }
    return Verdict::kAccept;
}

std::size_t AllEqualTester::rounds(double eps) const { return rounds_for(c_, eps); }

std::size_t AllEqualTester::query_bound(std::size_t, double eps) const {
    return 2 * rounds(eps);
}

Verdict AllEqualTester::test(StringAccess& x, double eps, Rng& rng) const {
    const std::size_t n = x.n();
    if (n == 0) throw std::invalid_argument("all_equal: empty string");
    const std::size_t r = rounds(eps);
    for (std::size_t t = 0; t < r; ++t) {
        const std::size_t i = rng.below(n);
        const std::size_t j = rng.below(n);
        if (x.bit(i) != x.bit(j)) return Verdict::kReject;
    }
    return Verdict::kAccept;
}

std::optional<bool> HadamardCorrector::correct(StringAccess& x, std::size_t i,
                                               Rng& rng) const {
    const std::size_t n = x.n();
    if (n == 0 || !std::has_single_bit(n)) {
        throw std::invalid_argument("hadamard corrector: n must be a power of two");
    }
    if (i >= n) throw std::out_of_range("hadamard corrector: position out of range");
    const std::size_t r = rng.below(n);
    return x.bit(i ^ r) != x.bit(r);
}

SpotCheckTester::SpotCheckTester(const StringTester& pi_tester, const SelfCorrector& corrector,
                                 std::size_t votes, double c)
    : pi_tester_(&pi_tester), corrector_(&corrector), votes_(votes), c_(c) {
    if (votes == 0) throw std::invalid_argument("spot_check: votes must be positive");
}

std::size_t SpotCheckTester::checks(double eps) const { return rounds_for(c_, eps); }

std::size_t SpotCheckTester::query_bound(std::size_t n, double eps) const {
    return pi_tester_->query_bound(n, corrector_->radius()) +
           checks(eps) * (1 + votes_ * corrector_->query_bound());
}

Verdict SpotCheckTester::test(StringAccess& x, double eps, Rng& rng) const {
    if (pi_tester_->test(x, corrector_->radius(), rng) == Verdict::kReject) {
        return Verdict::kReject;
    }
    const std::size_t r = checks(eps);
    for (std::size_t t = 0; t < r; ++t) {
        const std::size_t i = rng.below(x.n());
        const auto corrected = majority_correct(*corrector_, x, i, votes_, rng);
        if (!corrected || *corrected != x.bit(i)) return Verdict::kReject;
    }
    return Verdict::kAccept;
}

}  // namespace doho
