#include "doho/testers/label_invariant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "doho/core/rng.hpp"
#include "doho/std_testers/collision.hpp"
#include "doho/std_testers/std_tester.hpp"
#include "doho/testers/projection.hpp"

namespace doho {

namespace {

void check_args(std::size_t m, double eps, const char* who) {
    if (m == 0) throw std::invalid_argument(std::string(who) + ": m must be positive");
    if (!(eps > 0)) throw std::invalid_argument(std::string(who) + ": eps must be positive");
}

}  // namespace

std::size_t support_samples(std::size_t m, double eps, const TesterConstants& c) {
    return static_cast<std::size_t>(
        std::ceil(c.support_samples * static_cast<double>(m) / eps));
}

std::size_t support_positions(std::size_t n, std::size_t m, double eps,
                              const TesterConstants& c) {
    const double raw = c.support_positions * std::log(static_cast<double>(m) + 1.0) / eps;
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(raw)), 1, n);
}

TesterReport doho_support_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants, std::uint64_t seed) {
    check_args(m, eps, "doho_support");
    const std::size_t n = oracle.n();
    const std::size_t s = support_samples(m, eps, constants);
    const std::size_t ell = support_positions(n, m, eps, constants);
    Rng rng(seed);
    ProjectionContext ctx(n, ell, rng);
    const auto handles = oracle.draw(0, s);
    const auto restrictions = ctx.restrict_all(oracle, handles);
    const auto pattern = collision_pattern(std::span<const BitString>(restrictions));
    const std::size_t distinct = pattern.distinct();

    nlohmann::json trace;
    trace["J"] = ctx.positions();
    trace["samples"] = s;
    trace["ell"] = ell;
    trace["distinct"] = distinct;
    trace["m"] = m;
    trace["collision_pattern"] = pattern.counts;
    trace["vacuous"] = ell < 64 && m >= (std::uint64_t{1} << ell);
    const Verdict v = distinct <= m ? Verdict::kAccept : Verdict::kReject;
    return finish_report(oracle, v, s * ell, std::move(trace));
}

TesterReport doho_grained_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants, std::uint64_t seed) {
    check_args(m, eps, "doho_grained");
    const StdGrainedTester inner(m, constants.grained_phase1, constants.grained_phase2);
    return project_lift_tester(oracle, inner, eps, constants, seed);
}

TesterReport doho_uniform_tester(SampleOracle& oracle, std::size_t m, double eps,
                                 const TesterConstants& constants, std::uint64_t seed) {
    check_args(m, eps, "doho_uniform");
    const std::size_t n = oracle.n();
    const double log_m = static_cast<double>(std::bit_width(m - 1));  // ceil(log2 m)
    if (eps > 2.0 * log_m / static_cast<double>(n)) {
        auto report = doho_grained_tester(oracle, m, eps / 2, constants, seed);
        report.trace["path"] = "projection";
        return report;
    }
    const StdGrainedTester inner(m, constants.grained_phase1, constants.grained_phase2);
    const double inner_eps = eps / 2;
    const std::size_t s = inner.sample_complexity(n, inner_eps);
    const auto handles = oracle.draw(0, s);
    std::vector<BitString> samples;
    samples.reserve(s);
    for (const auto& h : handles) samples.push_back(query_all(oracle, h));
    nlohmann::json trace;
    trace["path"] = "full_read";
    trace["samples"] = s;
    nlohmann::json inner_trace = nlohmann::json::object();
    const Verdict v = inner.decide(samples, inner_eps, &inner_trace);
    trace["inner"] = inner_trace;
    return finish_report(oracle, v, s * n, std::move(trace));
}

}  // namespace doho
