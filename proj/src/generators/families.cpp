#include "doho/generators/families.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "doho/core/rng.hpp"
#include "doho/generators/sources.hpp"

namespace doho {

namespace {

BitString random_string(Rng& rng, std::size_t n) {
    BitString s(n);
    uniform_string_into(rng, n, s.words());
    return s;
}

}  // namespace

std::vector<BitString> random_far_strings(std::size_t n, std::size_t m, double min_distance,
                                          std::uint64_t seed, std::size_t attempts) {
    if (n == 0 || m == 0) throw std::invalid_argument("random subset: need n > 0 and m > 0");
    if (n < 63 && static_cast<double>(m) > std::ldexp(1.0, static_cast<int>(n))) {
        throw std::invalid_argument("random subset: m exceeds 2^n");
    }
    const auto need = static_cast<std::size_t>(std::ceil(min_distance * static_cast<double>(n) - 1e-9));
    Rng rng(seed);
    std::vector<BitString> out;
    std::size_t failures = 0;
    while (out.size() < m) {
        auto candidate = random_string(rng, n);
        const bool ok = std::all_of(out.begin(), out.end(), [&](const BitString& s) {
            return s != candidate && s.hamming(candidate) >= need;
        });
        if (ok) {
            out.push_back(std::move(candidate));
        } else if (++failures > attempts) {
            throw std::runtime_error("random subset: cannot meet the distance constraint");
        }
    }
    return out;
}

FiniteDistribution uniform_random_subset(std::size_t n, std::size_t m, double min_distance,
                                         std::uint64_t seed, std::size_t attempts) {
    return FiniteDistribution::uniform(n, random_far_strings(n, m, min_distance, seed, attempts));
}

FiniteDistribution ys_mixture(std::size_t n, const std::vector<BitString>& subset) {
    if (n == 0 || n > 16) throw std::invalid_argument("ys_mixture: explicit form needs n <= 16");
    std::set<BitString> s(subset.begin(), subset.end());
    if (s.empty()) throw std::invalid_argument("ys_mixture: S is empty");
    const std::size_t total = std::size_t{1} << n;
    if (s.size() >= total) throw std::invalid_argument("ys_mixture: complement of S is empty");
    for (const auto& x : s) {
        if (x.size() != n) throw std::invalid_argument("ys_mixture: length mismatch");
    }
    const double in_w = 0.5 / static_cast<double>(s.size());
    const double out_w = 0.5 / static_cast<double>(total - s.size());
    std::vector<Atom> atoms;
    atoms.reserve(total);
    for (std::uint64_t v = 0; v < total; ++v) {
        auto x = BitString::from_words(n, std::span<const std::uint64_t>(&v, 1));
        const double w = s.contains(x) ? in_w : out_w;
        atoms.push_back({std::move(x), w});
    }
    return FiniteDistribution::from_weighted(n, std::move(atoms), 1e-9);
}

FiniteDistribution code_lift(const LinearCode& code, const FiniteDistribution& messages) {
    if (messages.n() != code.k()) {
        throw std::invalid_argument("code_lift: messages must have length k");
    }
    return messages.map(code.n(), [&](const BitString& m) { return code.encode(m); });
}

FiniteDistribution relabel(const FiniteDistribution& p, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = p.n();
    if (n < 63 && static_cast<double>(p.support_size()) > std::ldexp(1.0, static_cast<int>(n))) {
        throw std::invalid_argument("relabel: support larger than the domain");
    }
    std::set<BitString> used;
    std::vector<Atom> atoms;
    for (const auto& a : p.atoms()) {
        BitString image = random_string(rng, n);
        while (used.contains(image)) image = random_string(rng, n);
        used.insert(image);
        atoms.push_back({std::move(image), a.weight});
    }
    return FiniteDistribution(n, std::move(atoms));
}

}  // namespace doho
