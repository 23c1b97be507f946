#pragma once

#include <cstddef>

namespace doho {

struct Interval {
    double low = 0;
    double high = 1;
    bool contains(double x) const noexcept { return low <= x && x <= high; }
};

inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion (0 trials -> [0, 1]).
Interval wilson_interval(std::size_t successes, std::size_t trials, double z = kZ95);

}  // namespace doho
