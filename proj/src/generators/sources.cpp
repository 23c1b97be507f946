#include "doho/generators/sources.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doho {

double truncation_mass(const std::vector<double>& rates, double delta) {
    if (!(delta >= 0 && delta <= 1)) throw std::invalid_argument("truncation: delta in [0,1]");
    const std::size_t n = rates.size();
    const auto radius = static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
    // Poisson-binomial distribution of the flip count.
    std::vector<double> dist(n + 1, 0.0);
    dist[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = i + 1; c > 0; --c) dist[c] = dist[c] * (1 - rates[i]) + dist[c - 1] * rates[i];
        dist[0] *= 1 - rates[i];
    }
    double tail = 0;
    for (std::size_t c = radius + 1; c <= n; ++c) tail += dist[c];
    return std::clamp(tail, 0.0, 1.0);
}

PerturbSource::PerturbSource(BitString center, double rate, double delta)
    : PerturbSource(center, std::vector<double>(center.size(), rate), delta) {}

PerturbSource::PerturbSource(BitString center, std::vector<double> rates, double delta)
    : center_(std::move(center)), rates_(std::move(rates)) {
    if (rates_.size() != center_.size()) throw std::invalid_argument("perturb: one rate per bit");
    for (double r : rates_) {
        if (!(r >= 0 && r <= 1)) throw std::invalid_argument("perturb: rates must lie in [0,1]");
    }
    radius_ = static_cast<std::size_t>(
        std::floor(delta * static_cast<double>(center_.size()) + 1e-9));
    // Radius 0 admits only x* itself.
    if (radius_ == 0) std::fill(rates_.begin(), rates_.end(), 0.0);
    truncated_ = truncation_mass(rates_, delta);
    if (truncated_ > 0.5) {
        throw std::invalid_argument("perturb: truncation would discard more than half the mass");
    }
}

void PerturbSource::sample_into(Rng& rng, std::span<std::uint64_t> out) const {
    const auto base = center_.words();
    while (true) {
        std::copy(base.begin(), base.end(), out.begin());
        std::size_t flips = 0;
        for (std::size_t i = 0; i < rates_.size(); ++i) {
            if (rates_[i] > 0 && rng.uniform01() < rates_[i]) {
                out[i >> 6] ^= std::uint64_t{1} << (i & 63);
                ++flips;
            }
        }
        if (flips <= radius_) return;
    }
}

MixtureSource::MixtureSource(std::vector<std::pair<SourcePtr, double>> parts) {
    if (parts.empty()) throw std::invalid_argument("mixture: no components");
    n_ = parts.front().first->n();
    double acc = 0;
    for (auto& [src, w] : parts) {
        if (!src || src->n() != n_) throw std::invalid_argument("mixture: length mismatch");
        if (!(w > 0)) throw std::invalid_argument("mixture: weights must be positive");
        acc += w;
        parts_.push_back(std::move(src));
        cumulative_.push_back(acc);
    }
    if (std::abs(acc - 1.0) > 1e-9) throw std::invalid_argument("mixture: weights must sum to 1");
}

void MixtureSource::sample_into(Rng& rng, std::span<std::uint64_t> out) const {
    const double u = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    parts_[static_cast<std::size_t>(it - cumulative_.begin())]->sample_into(rng, out);
}

void uniform_string_into(Rng& rng, std::size_t n, std::span<std::uint64_t> out) {
    for (auto& w : out) w = rng.next_u64();
    if (n % 64 != 0) out.back() &= (std::uint64_t{1} << (n % 64)) - 1;
}

ComplementMixtureSource::ComplementMixtureSource(std::size_t n, std::vector<BitString> subset)
    : n_(n), subset_(std::move(subset)) {
    if (subset_.empty()) throw std::invalid_argument("complement mixture: S is empty");
    std::sort(subset_.begin(), subset_.end());
    subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
    for (const auto& s : subset_) {
        if (s.size() != n) throw std::invalid_argument("complement mixture: length mismatch");
    }
    if (n < 63 && static_cast<double>(subset_.size()) > 0.5 * std::ldexp(1.0, static_cast<int>(n))) {
        throw std::invalid_argument("complement mixture: S must be at most half of {0,1}^n");
    }
}

void ComplementMixtureSource::sample_into(Rng& rng, std::span<std::uint64_t> out) const {
    if (rng.bernoulli(0.5)) {
        const auto& s = subset_[rng.below(subset_.size())];
        std::copy(s.words().begin(), s.words().end(), out.begin());
        return;
    }
    while (true) {
        uniform_string_into(rng, n_, out);
        const auto candidate = BitString::from_words(n_, out);
        if (!std::binary_search(subset_.begin(), subset_.end(), candidate)) return;
    }
}

}  // namespace doho
