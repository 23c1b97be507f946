#include "doho/distances/grain_round.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace doho {

namespace {

std::size_t floor_log2(std::size_t n) { return std::bit_width(n) - 1; }

std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

}  // namespace

std::size_t max_grain_offset(std::size_t n) {
    const std::size_t ell = floor_log2(n);
    return std::min(ell, ceil_log2(ell) + 1);
}

double grain_round_bound(std::size_t n, std::size_t offset) {
    const std::size_t ell = floor_log2(n);
    return static_cast<double>(ell) / static_cast<double>(n) +
           std::ldexp(1.0, -static_cast<int>(ell - offset));
}

FiniteDistribution grain_round(const FiniteDistribution& p, std::size_t offset) {
    const std::size_t n = p.n();
    if (n < 4) throw std::invalid_argument("grain_round: needs n >= 4");
    if (offset > max_grain_offset(n)) {
        throw std::invalid_argument("grain_round: offset " + std::to_string(offset) +
                                    " outside [0," + std::to_string(max_grain_offset(n)) + "]");
    }
    const std::size_t exponent = n - offset;
    if (exponent > 62) throw std::invalid_argument("grain_round: n - offset above 62");
    const std::size_t ell = floor_log2(n);
    const std::uint64_t grains = std::uint64_t{1} << exponent;

    // Zero the last ell bits; collect mass per truncated string.
    std::map<BitString, double> mass;
    for (const auto& a : p.atoms()) {
        BitString t = a.string;
        for (std::size_t i = n - ell; i < n; ++i) t.set(i, false);
        mass[t] += a.weight;
    }

    std::vector<Atom> atoms;
    std::uint64_t used = 0;
    for (const auto& [s, w] : mass) {
        const double units = std::floor(std::ldexp(w, static_cast<int>(exponent)));
        const auto k = std::min<std::uint64_t>(static_cast<std::uint64_t>(units), grains);
        if (k == 0) continue;
        used += k;
        atoms.push_back({s, std::ldexp(static_cast<double>(k), -static_cast<int>(exponent))});
    }
    if (used < grains) {
        BitString ones(n);
        for (std::size_t i = 0; i < n; ++i) ones.set(i, true);
        atoms.push_back(
            {ones, std::ldexp(static_cast<double>(grains - used), -static_cast<int>(exponent))});
    }
    return FiniteDistribution(n, std::move(atoms));
}

}  // namespace doho
