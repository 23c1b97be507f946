#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "doho/std_testers/collision.hpp"
#include "doho/std_testers/std_tester.hpp"

namespace doho {

namespace {

double log_factor(std::size_t m) { return std::max(1.0, std::log(static_cast<double>(m))); }

}  // namespace

StdGrainedTester::StdGrainedTester(std::size_t m, double c1, double c2)
    : m_(m), c1_(c1), c2_(c2) {
    if (m == 0) throw std::invalid_argument("std_grained: m must be positive");
    if (!(c1 > 0) || !(c2 > 0)) {
        throw std::invalid_argument("std_grained: constants must be positive");
    }
}

std::size_t StdGrainedTester::phase1_samples() const {
    return static_cast<std::size_t>(std::ceil(c1_ * static_cast<double>(m_) * log_factor(m_)));
}

std::size_t StdGrainedTester::phase2_samples(double eps) const {
    if (!(eps > 0) || eps >= 1) throw std::invalid_argument("std_grained: eps must be in (0,1)");
    return static_cast<std::size_t>(
        std::ceil(c2_ * static_cast<double>(m_) * log_factor(m_) / (eps * eps)));
}

std::size_t StdGrainedTester::sample_complexity(std::size_t, double eps) const {
    return phase1_samples() + phase2_samples(eps);
}

bool StdGrainedTester::near_multiple(double p, std::size_t m, double eps) {
    const double md = static_cast<double>(m);
    const double base = std::floor(p * md);
    for (double k : {base, base + 1.0}) {
        if (k < 1.0) continue;
        const double target = k / md;
        if (p >= (1.0 - 0.1 * eps) * target && p <= (1.0 + 0.1 * eps) * target) return true;
    }
    return false;
}

Verdict StdGrainedTester::decide(std::span<const BitString> samples, double eps,
                                 nlohmann::json* trace) const {
    const std::size_t s1 = phase1_samples();
    const std::size_t s2 = phase2_samples(eps);
    if (samples.size() != s1 + s2) {
        throw std::invalid_argument("std_grained: expected " + std::to_string(s1 + s2) +
                                    " samples, got " + std::to_string(samples.size()));
    }
    std::unordered_map<BitString, std::size_t> phase2;
    for (const auto& w : samples.first(s1)) phase2.emplace(w, 0);
    const std::size_t w_size = phase2.size();
    std::size_t outside = 0;
    for (const auto& x : samples.subspan(s1)) {
        auto it = phase2.find(x);
        if (it == phase2.end()) {
            ++outside;
        } else {
            ++it->second;
        }
    }
    const double floor_weight = (1.0 - 0.1 * eps) / (2.0 * static_cast<double>(m_));
    std::size_t off_grid = 0;
    for (const auto& [w, count] : phase2) {
        const double p = static_cast<double>(count) / static_cast<double>(s2);
        if (p < floor_weight) continue;
        if (!near_multiple(p, m_, eps)) ++off_grid;
    }
    if (trace) {
        (*trace)["phase1_samples"] = s1;
        (*trace)["phase2_samples"] = s2;
        (*trace)["W_size"] = w_size;
        (*trace)["outside_W"] = outside;
        (*trace)["off_grid"] = off_grid;
    }
    return outside == 0 && off_grid == 0 ? Verdict::kAccept : Verdict::kReject;
}

}  // namespace doho
