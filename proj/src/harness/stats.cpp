#include "doho/harness/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace doho {

Interval wilson_interval(std::size_t successes, std::size_t trials, double z) {
    if (successes > trials) throw std::invalid_argument("wilson: successes exceed trials");
    if (trials == 0) return {0.0, 1.0};
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / t;
    const double z2 = z * z;
    const double center = (p + z2 / (2 * t)) / (1 + z2 / t);
    const double half = z * std::sqrt(p * (1 - p) / t + z2 / (4 * t * t)) / (1 + z2 / t);
    // clamp against rounding so the interval always holds the point estimate
    return {std::clamp(std::min(center - half, p), 0.0, 1.0),
            std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

}  // namespace doho
