#include "doho/testers/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doho {

ProjectionContext::ProjectionContext(std::size_t n, std::size_t ell, Rng& rng) : n_(n) {
    if (ell == 0 || ell > n) throw std::invalid_argument("projection: need 0 < ell <= n");
    positions_ = rng.subset(n, ell);
}

ProjectionContext::ProjectionContext(std::size_t n, std::vector<std::size_t> positions)
    : n_(n), positions_(std::move(positions)) {
    if (positions_.empty()) throw std::invalid_argument("projection: empty position set");
    for (std::size_t k = 0; k < positions_.size(); ++k) {
        if (positions_[k] >= n) throw std::invalid_argument("projection: position out of range");
        if (k > 0 && positions_[k] <= positions_[k - 1]) {
            throw std::invalid_argument("projection: positions must be strictly increasing");
        }
    }
}

const BitString& ProjectionContext::restrict(SampleOracle& oracle, const SampleHandle& h) {
    if (oracle.n() != n_) throw std::invalid_argument("projection: oracle length mismatch");
    const auto key = std::make_pair(h.which, h.index);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, query_restriction(oracle, h, positions_)).first;
    }
    return it->second;
}

std::vector<BitString> ProjectionContext::restrict_all(SampleOracle& oracle,
                                                       const std::vector<SampleHandle>& handles) {
    std::vector<BitString> out;
    out.reserve(handles.size());
    for (const auto& h : handles) out.push_back(restrict(oracle, h));
    return out;
}

std::size_t lift_positions(std::size_t n, std::size_t s, double eps, double c) {
    if (!(eps > 0)) throw std::invalid_argument("lift_positions: eps must be positive");
    const double raw = c * std::log(std::max(static_cast<double>(s) / eps, 2.0)) / eps;
    const auto ell = static_cast<std::size_t>(std::ceil(raw));
    return std::clamp<std::size_t>(ell, 1, n);
}

TesterReport project_lift_tester(SampleOracle& oracle, const StdTester& inner, double eps,
                                 const TesterConstants& constants, std::uint64_t seed) {
    if (!(eps > 0)) throw std::invalid_argument("project_lift: eps must be positive");
    const std::size_t n = oracle.n();
    const double inner_eps = eps / 2;
    const std::size_t s = inner.sample_complexity(n, inner_eps);
    const std::size_t ell = lift_positions(n, s, eps, constants.lift_positions);
    Rng rng(seed);

    nlohmann::json trace;
    trace["inner"] = std::string(inner.name());
    trace["samples_per_block"] = s;
    trace["ell"] = ell;
    trace["blocks"] = nlohmann::json::array();
    int rejects = 0;
    for (int block = 0; block < 3; ++block) {
        ProjectionContext ctx(n, ell, rng);
        const auto handles = oracle.draw(0, s);
        auto restrictions = ctx.restrict_all(oracle, handles);
        for (auto& y : restrictions) y = y.padded(n);
        nlohmann::json inner_trace = nlohmann::json::object();
        const Verdict v = inner.decide(restrictions, inner_eps, &inner_trace);
        if (v == Verdict::kReject) ++rejects;
        trace["blocks"].push_back(
            {{"J", ctx.positions()}, {"verdict", to_string(v)}, {"inner", inner_trace}});
    }
    const Verdict verdict = rejects >= 2 ? Verdict::kReject : Verdict::kAccept;
    return finish_report(oracle, verdict, 3 * s * ell, std::move(trace));
}

}  // namespace doho
