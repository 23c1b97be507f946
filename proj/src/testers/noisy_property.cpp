#include "doho/testers/noisy_property.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doho/core/rng.hpp"
#include "doho/testers/perturbation.hpp"

namespace doho {

MajorityEmulation::MajorityEmulation(SampleOracle& oracle, std::size_t votes)
    : oracle_(&oracle), votes_(votes), cache_(oracle.n(), -1) {
    if (votes == 0) throw std::invalid_argument("majority emulation: votes must be positive");
}

bool MajorityEmulation::bit(std::size_t i) {
    if (i >= cache_.size()) throw std::out_of_range("majority emulation: position out of range");
    if (cache_[i] < 0) {
        std::size_t ones = 0;
        for (const auto& h : oracle_->draw(0, votes_)) ones += oracle_->query(h, i);
        cache_[i] = 2 * ones > votes_ ? 1 : 0;
        ++positions_;
    }
    return cache_[i] == 1;
}

std::size_t emulation_votes(const StringTester& tester, std::size_t n, double eps,
                            const TesterConstants& c) {
    const double q = static_cast<double>(tester.query_bound(n, eps / 2));
    auto v = static_cast<std::size_t>(std::ceil(c.majority_votes * std::log(q + 1.0)));
    v = std::max<std::size_t>(v, 1);
    return v % 2 == 0 ? v + 1 : v;
}

TesterReport noisy_property_tester(SampleOracle& oracle, const StringTester& tester, double eta,
                                   double delta, double eps, const TesterConstants& constants,
                                   std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("noisy_property: eps must be positive");
    Rng rng(seed);
    nlohmann::json trace = nlohmann::json::object();
    nlohmann::json perturbation = nlohmann::json::object();
    std::size_t scheduled = 0;
    const Verdict first =
        perturbation_run(oracle, eta, delta, eps / 2, constants, rng, perturbation, &scheduled);
    trace["perturbation"] = perturbation;
    if (first == Verdict::kReject) {
        trace["decided_by"] = "perturbation";
        return finish_report(oracle, first, scheduled, std::move(trace));
    }
    const std::size_t votes = emulation_votes(tester, oracle.n(), eps, constants);
    MajorityEmulation ideal(oracle, votes);
    const Verdict v = tester.test(ideal, eps / 2, rng);
    scheduled += votes * ideal.positions();
    trace["decided_by"] = std::string(tester.name());
    trace["votes"] = votes;
    trace["emulated_positions"] = ideal.positions();
    return finish_report(oracle, v, scheduled, std::move(trace));
}

}  // namespace doho
