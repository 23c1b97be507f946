#include "doho/generators/ideal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "doho/generators/sources.hpp"

namespace doho {

namespace {

std::size_t square_root(std::size_t n) {
    const auto v = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (n == 0 || v * v != n) throw std::invalid_argument("graph length is not a square");
    return v;
}

BitString relabel(const BitString& adj, std::size_t v, const std::vector<std::size_t>& pi) {
    BitString out(adj.size());
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = 0; b < v; ++b) {
            if (adj[a * v + b]) out.set(pi[a] * v + pi[b], true);
        }
    }
    return out;
}

}  // namespace

FiniteDistribution perturb_dist(const BitString& center, double eta, double delta) {
    const std::size_t n = center.size();
    if (n == 0 || n > kMaxEnumeratedPerturbBits) {
        throw std::invalid_argument("perturb_dist: enumeration needs 1 <= n <= 12");
    }
    if (!(eta >= 0 && eta < 0.5)) throw std::invalid_argument("perturb_dist: need 0 <= eta < 0.5");
    if (!(delta >= 0 && delta <= 1)) throw std::invalid_argument("perturb_dist: need delta in [0,1]");
    const auto radius = static_cast<std::size_t>(std::floor(delta * static_cast<double>(n) + 1e-9));
    // Radius 0 leaves x* as the only member of the family.
    if (radius == 0) return FiniteDistribution::point_mass(center);
    const std::vector<double> rates(n, eta);
    if (truncation_mass(rates, delta) > 0.5) {
        throw std::invalid_argument("perturb_dist: truncation would discard more than half the mass");
    }
    std::vector<Atom> atoms;
    double kept = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto k = static_cast<std::size_t>(std::popcount(mask));
        if (k > radius) continue;
        const double w = std::pow(eta, static_cast<double>(k)) *
                         std::pow(1 - eta, static_cast<double>(n - k));
        if (w == 0) continue;
        BitString x = center;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) x.flip(i);
        }
        atoms.push_back({std::move(x), w});
        kept += w;
    }
    for (auto& a : atoms) a.weight /= kept;
    return FiniteDistribution::from_weighted(n, std::move(atoms), 1e-9);
}

FiniteDistribution shift_dist(const BitString& center, std::vector<double> law) {
    const std::size_t n = center.size();
    if (n == 0) throw std::invalid_argument("shift_dist: empty string");
    if (law.empty()) law.assign(n, 1.0 / static_cast<double>(n));
    if (law.size() != n) throw std::invalid_argument("shift_dist: law needs n weights");
    std::vector<Atom> atoms;
    for (std::size_t j = 0; j < n; ++j) {
        if (law[j] < 0) throw std::invalid_argument("shift_dist: negative weight");
        if (law[j] > 0) atoms.push_back({center.rotated(j), law[j]});
    }
    return FiniteDistribution::from_weighted(n, std::move(atoms), 1e-9);
}

FiniteDistribution iso_copies_dist(
    const BitString& adjacency,
    const std::vector<std::pair<std::vector<std::size_t>, double>>& law) {
    const std::size_t v = square_root(adjacency.size());
    if (v > kMaxEnumeratedVertices) throw std::invalid_argument("iso_copies_dist: v must be <= 7");
    std::vector<Atom> atoms;
    if (law.empty()) {
        std::vector<std::size_t> pi(v);
        std::iota(pi.begin(), pi.end(), 0);
        std::vector<BitString> images;
        do {
            images.push_back(relabel(adjacency, v, pi));
        } while (std::next_permutation(pi.begin(), pi.end()));
        const double w = 1.0 / static_cast<double>(images.size());
        for (auto& img : images) atoms.push_back({std::move(img), w});
    } else {
        for (const auto& [pi, w] : law) {
            std::vector<std::size_t> sorted = pi;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < v; ++i) {
                if (sorted.size() != v || sorted[i] != i) {
                    throw std::invalid_argument("iso_copies_dist: law entry is not a permutation");
                }
            }
            atoms.push_back({relabel(adjacency, v, pi), w});
        }
    }
    return FiniteDistribution::from_weighted(adjacency.size(), std::move(atoms), 1e-9);
}

BitString path_graph(std::size_t v) {
    BitString adj(v * v);
    for (std::size_t a = 0; a + 1 < v; ++a) {
        adj.set(a * v + a + 1, true);
        adj.set((a + 1) * v + a, true);
    }
    return adj;
}

BitString cycle_graph(std::size_t v) {
    if (v < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    BitString adj = path_graph(v);
    adj.set(v - 1, true);
    adj.set((v - 1) * v, true);
    return adj;
}

}  // namespace doho
