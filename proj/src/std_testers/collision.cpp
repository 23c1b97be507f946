#include "doho/std_testers/collision.hpp"

namespace doho {

std::size_t CollisionPattern::samples() const noexcept {
    std::size_t s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += (i + 1) * counts[i];
    return s;
}

std::size_t CollisionPattern::distinct() const noexcept {
    std::size_t d = 0;
    for (auto c : counts) d += c;
    return d;
}

CollisionPattern collision_pattern(std::span<const BitString> samples) {
    return collision_pattern<BitString>(samples);
}

}  // namespace doho
