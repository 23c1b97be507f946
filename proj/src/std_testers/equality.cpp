#include "doho/std_testers/equality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace doho {

double equality_rate(std::size_t m, double eps, double c) {
    if (m == 0) throw std::invalid_argument("equality: m must be positive");
    if (!(eps > 0)) throw std::invalid_argument("equality: eps must be positive");
    const double md = static_cast<double>(m);
    return c * std::max(std::pow(eps, -4.0 / 3.0) * std::pow(md, 2.0 / 3.0),
                        std::sqrt(md) / (eps * eps));
}

double equality_threshold(std::size_t m, double eps, double lambda) {
    return lambda * lambda * eps * eps / (2.0 * static_cast<double>(m));
}

double equality_statistic(std::span<const BitString> a, std::span<const BitString> b) {
    std::unordered_map<BitString, std::pair<double, double>> counts;
    counts.reserve(a.size() + b.size());
    for (const auto& x : a) counts[x].first += 1.0;
    for (const auto& y : b) counts[y].second += 1.0;
    double z = 0.0;
    for (const auto& [v, ab] : counts) {
        const double d = ab.first - ab.second;
        z += d * d - ab.first - ab.second;
    }
    return z;
}

std::pair<std::size_t, std::size_t> poissonized_counts(Rng& rng, double lambda) {
    const auto a = rng.poisson(lambda);
    const auto b = rng.poisson(lambda);
    return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

Verdict std_equality_tester(std::span<const BitString> a, std::span<const BitString> b,
                            std::size_t m, double eps, double c, nlohmann::json* trace) {
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("std_equality: both sides need at least one sample");
    }
    const double lambda = equality_rate(m, eps, c);
    const double tau = equality_threshold(m, eps, lambda);
    const double z = equality_statistic(a, b);
    if (trace) {
        (*trace)["lambda"] = lambda;
        (*trace)["tau"] = tau;
        (*trace)["Z"] = z;
        (*trace)["samples_a"] = a.size();
        (*trace)["samples_b"] = b.size();
    }
    return z < tau ? Verdict::kAccept : Verdict::kReject;
}

}  // namespace doho
