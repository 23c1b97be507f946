#include "doho/testers/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doho {

PerturbationPlan perturbation_plan(double eta, double delta, double eps,
                                   const TesterConstants& c) {
    if (!(eta >= 0 && eta < 0.5)) throw std::invalid_argument("perturbation: need 0 <= eta < 0.5");
    if (!(delta >= 0 && delta <= 1)) throw std::invalid_argument("perturbation: need delta in [0,1]");
    if (!(eps > 0)) throw std::invalid_argument("perturbation: eps must be positive");
    PerturbationPlan p;
    p.eps = eta + 0.25 * eps < 0.5 ? eps : 2 * (0.5 - eta);
    const double e = p.eps;
    const double log_term = std::log(1.0 / e + 1.0);
    p.indices = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(c.perturb_indices * log_term / (e * e))));
    p.estimate_samples = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(
               c.perturb_estimates * std::log(static_cast<double>(p.indices) + 1.0) / (e * e))));
    p.check_samples = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(c.perturb_checks * log_term / e)));
    return p;
}

Verdict perturbation_run(SampleOracle& oracle, double eta, double delta, double eps,
                         const TesterConstants& constants, Rng& rng, nlohmann::json& trace,
                         std::size_t* queries) {
    const std::size_t n = oracle.n();
    const auto plan = perturbation_plan(eta, delta, eps, constants);
    const double e = plan.eps;

    // Step 1
    std::vector<std::size_t> index(plan.indices);
    for (auto& i : index) i = rng.below(n);
    std::vector<std::size_t> distinct = index;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    trace["eps_effective"] = e;
    trace["I"] = index;
    trace["estimate_samples"] = plan.estimate_samples;
    trace["check_samples"] = plan.check_samples;

    // Step 2
    std::vector<std::size_t> ones(distinct.size(), 0);
    for (const auto& h : oracle.draw(0, plan.estimate_samples)) {
        for (std::size_t k = 0; k < distinct.size(); ++k) ones[k] += oracle.query(h, distinct[k]);
    }
    *queries += plan.estimate_samples * distinct.size();
    const double low = eta + 0.2 * e;
    const double high = 1.0 - eta - 0.2 * e;
    std::vector<char> guess(n, 0);
    for (std::size_t k = 0; k < distinct.size(); ++k) {
        const double p = static_cast<double>(ones[k]) / static_cast<double>(plan.estimate_samples);
        if (p >= low && p <= high) {
            trace["decided_at_step"] = 2;
            trace["ambiguous_position"] = distinct[k];
            trace["estimate"] = p;
            return Verdict::kReject;
        }
        guess[distinct[k]] = p > low;
    }

    // Step 3
    const double limit = (delta + 0.1 * e) * static_cast<double>(index.size());
    std::vector<char> bit(n, 0);
    std::size_t worst = 0;
    for (const auto& h : oracle.draw(0, plan.check_samples)) {
        for (std::size_t i : distinct) bit[i] = oracle.query(h, i);
        std::size_t mismatches = 0;
        for (std::size_t i : index) mismatches += bit[i] != guess[i];
        worst = std::max(worst, mismatches);
    }
    *queries += plan.check_samples * distinct.size();
    trace["decided_at_step"] = 3;
    trace["max_mismatches"] = worst;
    trace["mismatch_limit"] = limit;
    return static_cast<double>(worst) > limit ? Verdict::kReject : Verdict::kAccept;
}

TesterReport perturbation_tester(SampleOracle& oracle, double eta, double delta, double eps,
                                 const TesterConstants& constants, std::uint64_t seed) {
    Rng rng(seed);
    nlohmann::json trace = nlohmann::json::object();
    std::size_t scheduled = 0;
    const Verdict v = perturbation_run(oracle, eta, delta, eps, constants, rng, trace, &scheduled);
    return finish_report(oracle, v, scheduled, std::move(trace));
}

}  // namespace doho
