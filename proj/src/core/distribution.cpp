#include "doho/core/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace doho {

BitString StringSource::sample(Rng& rng) const {
    BitString out(n());
    sample_into(rng, out.words());
    return out;
}

FiniteDistribution::FiniteDistribution(std::size_t n, std::vector<Atom> atoms)
    : n_(n), atoms_(std::move(atoms)) {
    if (n_ == 0) {
        throw std::invalid_argument("distribution needs a positive object size");
    }
    if (atoms_.empty()) {
        throw std::invalid_argument("distribution needs at least one atom");
    }
    std::unordered_map<BitString, std::size_t> seen;
    seen.reserve(atoms_.size() * 2);
    double total = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const auto& a = atoms_[i];
        if (a.string.size() != n_) {
            throw std::invalid_argument("atom " + a.string.to_string() + " has length " +
                                        std::to_string(a.string.size()) + ", expected " +
                                        std::to_string(n_));
        }
        if (!(a.weight > 0.0) || a.weight > 1.0 + kWeightTolerance) {
            throw std::invalid_argument("atom weight outside (0,1]: " + std::to_string(a.weight));
        }
        if (!seen.emplace(a.string, i).second) {
            throw std::invalid_argument("duplicate atom " + a.string.to_string());
        }
        total += a.weight;
    }
    if (std::fabs(total - 1.0) > kWeightTolerance) {
        throw std::invalid_argument("weights sum to " + std::to_string(total) + ", not 1");
    }
    cumulative_.resize(atoms_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        acc += atoms_[i].weight;
        cumulative_[i] = acc;
    }
    cumulative_.back() = std::max(cumulative_.back(), 1.0);
}

FiniteDistribution FiniteDistribution::from_weighted(std::size_t n, std::vector<Atom> atoms,
                                                     double tolerance) {
    std::unordered_map<BitString, std::size_t> index;
    std::vector<Atom> merged;
    merged.reserve(atoms.size());
    double total = 0.0;
    for (auto& a : atoms) {
        if (a.weight < 0.0 || !std::isfinite(a.weight)) {
            throw std::invalid_argument("negative or non-finite weight");
        }
        if (a.weight == 0.0) continue;
        total += a.weight;
        auto [it, fresh] = index.emplace(a.string, merged.size());
        if (fresh) {
            merged.push_back(std::move(a));
        } else {
            merged[it->second].weight += a.weight;
        }
    }
    if (std::fabs(total - 1.0) > tolerance) {
        throw std::invalid_argument("weights sum to " + std::to_string(total) + ", not 1");
    }
    if (total != 1.0) {
        for (auto& a : merged) a.weight /= total;
    }
    return FiniteDistribution(n, std::move(merged));
}

FiniteDistribution FiniteDistribution::point_mass(const BitString& s) {
    return FiniteDistribution(s.size(), {{s, 1.0}});
}

FiniteDistribution FiniteDistribution::uniform(std::size_t n, std::vector<BitString> support) {
    if (support.empty()) {
        throw std::invalid_argument("uniform distribution over an empty set");
    }
    const double w = 1.0 / static_cast<double>(support.size());
    std::vector<Atom> atoms;
    atoms.reserve(support.size());
    for (auto& s : support) atoms.push_back({std::move(s), w});
    return FiniteDistribution(n, std::move(atoms));
}

double FiniteDistribution::weight_of(const BitString& s) const {
    for (const auto& a : atoms_) {
        if (a.string == s) return a.weight;
    }
    return 0.0;
}

FiniteDistribution FiniteDistribution::canonical() const {
    auto sorted = atoms_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Atom& a, const Atom& b) { return a.string < b.string; });
    return FiniteDistribution(n_, std::move(sorted));
}

std::size_t FiniteDistribution::sample_index(Rng& rng) const {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto idx = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(idx, atoms_.size() - 1);
}

void FiniteDistribution::sample_into(Rng& rng, std::span<std::uint64_t> out) const {
    const auto words = atoms_[sample_index(rng)].string.words();
    std::copy(words.begin(), words.end(), out.begin());
}

FiniteDistribution FiniteDistribution::restricted(std::span<const std::size_t> positions) const {
    return map(positions.size(), [&](const BitString& s) { return s.restricted(positions); });
}

bool operator==(const FiniteDistribution& a, const FiniteDistribution& b) {
    if (a.n_ != b.n_ || a.atoms_.size() != b.atoms_.size()) return false;
    for (const auto& atom : a.atoms_) {
        if (b.weight_of(atom.string) != atom.weight) return false;
    }
    return true;
}

}  // namespace doho
