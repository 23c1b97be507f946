#include "doho/testers/cyclic_shift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "doho/core/rng.hpp"

namespace doho {

namespace {

std::size_t capped(double raw, std::size_t n) {
    return std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(raw)), 1, n);
}

std::vector<std::size_t> draw_positions(Rng& rng, std::size_t n, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (auto& v : out) v = rng.below(n);
    return out;
}

}  // namespace

std::vector<CyclicLevel> cyclic_schedule(std::size_t n, double eps, CyclicMode mode,
                                         const TesterConstants& c) {
    if (!(eps > 0)) throw std::invalid_argument("cyclic_shift: eps must be positive");
    if (n == 0) throw std::invalid_argument("cyclic_shift: n must be positive");
    const double log_term = std::log(std::max(static_cast<double>(n) / eps, 2.0));
    if (mode == CyclicMode::kSimple) {
        const auto t = static_cast<std::size_t>(std::ceil(c.ideal_samples / eps));
        return {{std::max<std::size_t>(t, 2) - 1, capped(c.cyclic_offsets * log_term / eps, n)}};
    }
    const int levels = std::max(1, static_cast<int>(std::ceil(std::log2(2.0 / eps))));
    std::vector<CyclicLevel> out;
    for (int r = 1; r <= levels; ++r) {
        const double scale = std::ldexp(1.0, r);
        const auto t = static_cast<std::size_t>(
            std::ceil(c.ideal_samples * levels / (scale * eps)));
        out.push_back({std::max<std::size_t>(t, 1), capped(c.cyclic_offsets * scale * log_term, n)});
    }
    return out;
}

std::size_t cyclic_shift_count(std::size_t n, std::size_t total_samples,
                               const TesterConstants& c) {
    const double t = std::max(static_cast<double>(total_samples), 2.0);
    return capped(c.cyclic_shifts * std::sqrt(static_cast<double>(n) * std::log(t)), n);
}

bool cyclic_pair_aligned(StringAccess& x, StringAccess& y, const std::vector<std::size_t>& shifts,
                         const std::vector<std::size_t>& offsets) {
    const std::size_t n = x.n();
    if (y.n() != n) throw std::invalid_argument("cyclic_pair_aligned: length mismatch");
    auto signature = [&](StringAccess& s, std::size_t shift) {
        BitString sig(offsets.size());
        for (std::size_t k = 0; k < offsets.size(); ++k) sig.set(k, s.bit((shift + offsets[k]) % n));
        return sig;
    };
    std::unordered_set<BitString> seen;
    for (std::size_t s : shifts) seen.insert(signature(x, s));
    bool aligned = false;
    for (std::size_t s : shifts) aligned |= seen.contains(signature(y, s));
    return aligned;
}

TesterReport cyclic_shift_tester(SampleOracle& oracle, double eps, CyclicMode mode,
                                 const TesterConstants& constants, std::uint64_t seed) {
    const std::size_t n = oracle.n();
    const auto schedule = cyclic_schedule(n, eps, mode, constants);
    std::size_t total = 1;
    for (const auto& level : schedule) total += level.samples;
    const std::size_t m = cyclic_shift_count(n, total, constants);
    Rng rng(seed);

    nlohmann::json trace;
    trace["mode"] = mode == CyclicMode::kSimple ? "simple" : "levin";
    trace["shift_count"] = m;
    trace["pairs"] = nlohmann::json::array();
    SampleAccess reference(oracle, oracle.draw(0, 1).front());
    std::vector<SampleAccess> others;
    std::size_t failures = 0;
    for (const auto& level : schedule) {
        for (const auto& h : oracle.draw(0, level.samples)) {
            others.emplace_back(oracle, h);
            const auto shifts = draw_positions(rng, n, m);
            const auto offsets = draw_positions(rng, n, level.offsets);
            const bool ok = cyclic_pair_aligned(reference, others.back(), shifts, offsets);
            if (!ok) ++failures;
            trace["pairs"].push_back({{"shifts", shifts}, {"offsets", offsets}, {"aligned", ok}});
        }
    }
    trace["failed_pairs"] = failures;
    const std::size_t scheduled = cyclic_planned_queries(n, trace);
    return finish_report(oracle, failures > 0 ? Verdict::kReject : Verdict::kAccept, scheduled,
                         std::move(trace));
}

std::size_t cyclic_planned_queries(std::size_t n, const nlohmann::json& trace) {
    std::vector<char> on_reference(n, 0);
    std::vector<char> on_sample(n, 0);
    std::size_t total = 0;
    for (const auto& pair : trace.at("pairs")) {
        std::fill(on_sample.begin(), on_sample.end(), 0);
        for (std::size_t s : pair.at("shifts")) {
            for (std::size_t o : pair.at("offsets")) {
                const std::size_t p = (s + o) % n;
                if (!on_sample[p]) {
                    on_sample[p] = 1;
                    ++total;
                }
                if (!on_reference[p]) {
                    on_reference[p] = 1;
                    ++total;
                }
            }
        }
    }
    return total;
}

}  // namespace doho
