#include "doho/distances/metric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace doho {

std::string_view to_string(GroundMetric g) noexcept {
    return g == GroundMetric::kRelativeHamming ? "hamming" : "inequality";
}

double hamming_rel(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hamming_rel: strings of different length");
    }
    if (x.empty()) return 0.0;
    return static_cast<double>(x.hamming(y)) / static_cast<double>(x.size());
}

double ground_distance(GroundMetric g, const BitString& x, const BitString& y) {
    if (g == GroundMetric::kRelativeHamming) return hamming_rel(x, y);
    if (x.size() != y.size()) {
        throw std::invalid_argument("ground_distance: strings of different length");
    }
    return x == y ? 0.0 : 1.0;
}

double tv(const FiniteDistribution& p, const FiniteDistribution& q) {
    if (p.n() != q.n()) throw std::invalid_argument("tv: distributions over different n");
    std::unordered_map<BitString, double> diff;
    for (const auto& a : p.atoms()) diff[a.string] += a.weight;
    for (const auto& a : q.atoms()) diff[a.string] -= a.weight;
    double total = 0.0;
    for (const auto& [s, d] : diff) total += std::fabs(d);
    return std::min(1.0, 0.5 * total);
}

}  // namespace doho
