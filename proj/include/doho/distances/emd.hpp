#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "doho/core/distribution.hpp"
#include "doho/distances/metric.hpp"

namespace doho {

struct TransportEntry {
    std::size_t source;  ///< atom index in P
    std::size_t target;  ///< atom index in Q
    double mass;
};

struct TransportPlan {
    std::vector<TransportEntry> entries;
    double cost = 0.0;
};

struct EmdResult {
    double value = 0.0;
    TransportPlan plan;
};

/// Exact min-cost transportation between `supply` and `demand` (both summing
/// to the same total up to rounding) with cost(i, j). Successive shortest
/// paths with node potentials; residuals below 1e-12 count as zero.
TransportPlan solve_transport(std::span<const double> supply, std::span<const double> demand,
                              const std::function<double(std::size_t, std::size_t)>& cost);

/// Earth mover's distance between P and Q under the ground metric, with an
/// optimal plan indexed by atom positions of P and Q.
EmdResult emd(const FiniteDistribution& p, const FiniteDistribution& q,
              GroundMetric g = GroundMetric::kRelativeHamming);

/// Cost of `plan` recomputed from scratch.
double plan_cost(const TransportPlan& plan, const FiniteDistribution& p,
                 const FiniteDistribution& q, GroundMetric g);

}  // namespace doho
