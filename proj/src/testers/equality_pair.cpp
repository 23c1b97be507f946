#include "doho/testers/equality_pair.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doho/std_testers/equality.hpp"
#include "doho/testers/projection.hpp"

namespace doho {

double equality_inner_proximity(double eps, SupportBound bound) {
    return (bound == SupportBound::kBothSides ? 0.3 : 0.25) * eps;
}

std::size_t equality_positions(std::size_t n, std::size_t m, double eps,
                               const TesterConstants& c) {
    if (!(eps > 0)) throw std::invalid_argument("equality_pair: eps must be positive");
    const double raw = c.equality_positions * std::log(static_cast<double>(m) + 1.0) / eps;
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(raw)), 1, n);
}

EqualityPairRun equality_pair_run(SampleOracle& oracle, std::size_t m, double eps,
                                  SupportBound bound, const TesterConstants& constants, Rng& rng,
                                  nlohmann::json& trace) {
    if (oracle.arity() != 2) throw std::invalid_argument("equality_pair: oracle must have arity 2");
    if (m == 0) throw std::invalid_argument("equality_pair: m must be positive");
    const std::size_t n = oracle.n();
    const double inner_eps = equality_inner_proximity(eps, bound);
    const double lambda = equality_rate(m, inner_eps, constants.equality_rate);
    const std::size_t ell = equality_positions(n, m, eps, constants);
    auto [a, b] = poissonized_counts(rng, lambda);
    a = std::max<std::size_t>(a, 1);
    b = std::max<std::size_t>(b, 1);

    ProjectionContext ctx(n, ell, rng);
    const auto hx = oracle.draw(0, a);
    const auto hy = oracle.draw(1, b);
    const auto rx = ctx.restrict_all(oracle, hx);
    const auto ry = ctx.restrict_all(oracle, hy);

    trace["J"] = ctx.positions();
    trace["ell"] = ell;
    trace["inner_eps"] = inner_eps;
    EqualityPairRun run;
    run.verdict = std_equality_tester(rx, ry, m, inner_eps, constants.equality_rate, &trace);
    run.samples_x = a;
    run.samples_y = b;
    run.positions = ctx.positions();
    run.handles_y = hy;
    return run;
}

TesterReport equality_pair_tester(SampleOracle& oracle, std::size_t m, double eps,
                                  SupportBound bound, const TesterConstants& constants,
                                  std::uint64_t seed) {
    Rng rng(seed);
    nlohmann::json trace = nlohmann::json::object();
    const auto run = equality_pair_run(oracle, m, eps, bound, constants, rng, trace);
    const std::size_t scheduled = (run.samples_x + run.samples_y) * run.positions.size();
    return finish_report(oracle, run.verdict, scheduled, std::move(trace));
}

}  // namespace doho
