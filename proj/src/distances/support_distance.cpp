#include "doho/distances/support_distance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace doho {

namespace {

// Majority center of the atoms in `mask` and its transport cost.
std::pair<BitString, double> majority_center(std::span<const Atom> atoms, std::uint32_t mask,
                                             std::size_t n) {
    BitString center(n);
    double cost = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double ones = 0.0, zeros = 0.0;
        for (std::size_t k = 0; k < atoms.size(); ++k) {
            if (!(mask >> k & 1u)) continue;
            (atoms[k].string[i] ? ones : zeros) += atoms[k].weight;
        }
        if (ones > zeros) {
            center.set(i, true);
            cost += zeros;
        } else {
            cost += ones;
        }
    }
    return {std::move(center), cost / static_cast<double>(n)};
}

}  // namespace

SupportDistance dist_to_support_m(const FiniteDistribution& p, std::size_t m) {
    if (m == 0) throw std::invalid_argument("dist_to_support_m: m must be positive");
    const auto atoms = p.atoms();
    const std::size_t k = atoms.size();
    SupportDistance out;
    if (k <= m) {
        for (std::size_t a = 0; a < k; ++a) {
            out.centers.push_back(atoms[a].string);
            out.cluster_of.push_back(a);
        }
        return out;
    }
    if (k > kMaxSupportForPartition) {
        throw std::invalid_argument("dist_to_support_m: support " + std::to_string(k) +
                                    " exceeds the exhaustive-search limit " +
                                    std::to_string(kMaxSupportForPartition));
    }

    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    std::vector<double> cluster_cost(full + 1, 0.0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        cluster_cost[mask] = majority_center(atoms, mask, p.n()).second;
    }

    // best[j][mask]: cheapest cover of `mask` by exactly j clusters; the
    // cluster holding the lowest atom of `mask` is chosen first.
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> best(m + 1, std::vector<double>(full + 1, kInf));
    std::vector<std::vector<std::uint32_t>> choice(m + 1,
                                                   std::vector<std::uint32_t>(full + 1, 0));
    best[0][0] = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const std::uint32_t low = mask & (~mask + 1);
            const std::uint32_t rest = mask ^ low;
            // Enumerate submasks of `rest`, each joined with `low`.
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                const std::uint32_t cluster = sub | low;
                const double prev = best[j - 1][mask ^ cluster];
                if (prev < kInf) {
                    const double c = prev + cluster_cost[cluster];
                    if (c < best[j][mask]) {
                        best[j][mask] = c;
                        choice[j][mask] = cluster;
                    }
                }
                if (sub == 0) break;
            }
        }
    }

    std::size_t best_j = 1;
    for (std::size_t j = 2; j <= m; ++j) {
        if (best[j][full] < best[best_j][full]) best_j = j;
    }
    out.value = std::clamp(best[best_j][full], 0.0, 1.0);
    out.cluster_of.assign(k, 0);
    std::uint32_t mask = full;
    for (std::size_t j = best_j; j >= 1; --j) {
        const std::uint32_t cluster = choice[j][mask];
        for (std::size_t a = 0; a < k; ++a) {
            if (cluster >> a & 1u) out.cluster_of[a] = out.centers.size();
        }
        out.centers.push_back(majority_center(atoms, cluster, p.n()).first);
        mask ^= cluster;
    }
    return out;
}

}  // namespace doho
