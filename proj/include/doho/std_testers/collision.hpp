#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "doho/core/bitstring.hpp"

namespace doho {

/// counts[i-1] = number of distinct values seen exactly i times.
struct CollisionPattern {
    std::vector<std::size_t> counts;

    std::size_t samples() const noexcept;
    std::size_t distinct() const noexcept;
    /// c_i, 0 when i is beyond the stored range.
    std::size_t c(std::size_t i) const noexcept {
        return i >= 1 && i <= counts.size() ? counts[i - 1] : 0;
    }

    friend bool operator==(const CollisionPattern&, const CollisionPattern&) = default;
};

template <typename T, typename Hash = std::hash<T>>
std::unordered_map<T, std::size_t, Hash> value_counts(std::span<const T> values) {
    std::unordered_map<T, std::size_t, Hash> counts;
    counts.reserve(values.size());
    for (const auto& v : values) ++counts[v];
    return counts;
}

template <typename T, typename Hash = std::hash<T>>
CollisionPattern collision_pattern(std::span<const T> values) {
    CollisionPattern p;
    p.counts.assign(values.size(), 0);
    for (const auto& [v, k] : value_counts<T, Hash>(values)) ++p.counts[k - 1];
    while (!p.counts.empty() && p.counts.back() == 0) p.counts.pop_back();
    return p;
}

CollisionPattern collision_pattern(std::span<const BitString> samples);

}  // namespace doho
