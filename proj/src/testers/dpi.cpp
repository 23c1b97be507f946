#include "doho/testers/dpi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doho/testers/amplify.hpp"

namespace doho {

std::vector<DpiLevel> dpi_schedule(double eps, DpiMode mode, const TesterConstants& c) {
    if (!(eps > 0)) throw std::invalid_argument("dpi: eps must be positive");
    if (mode == DpiMode::kPlain) {
        return {{static_cast<std::size_t>(std::ceil(c.dpi_samples / eps)), eps / 2}};
    }
    const auto levels = static_cast<int>(std::ceil(std::log2(16.0 / eps)));
    std::vector<DpiLevel> out;
    for (int i = 1; i <= std::max(levels, 1); ++i) {
        const double weight = static_cast<double>((i + 1) * (i + 1)) * std::ldexp(1.0, i);
        out.push_back({static_cast<std::size_t>(std::ceil(c.dpi_samples * weight / 16.0)),
                       std::min(std::ldexp(eps, i - 3), 1.0)});
    }
    return out;
}

std::size_t dpi_votes(double eps, const TesterConstants& c) {
    auto v = static_cast<std::size_t>(std::ceil(c.amplification * std::log(1.0 / eps + 1.0)));
    v = std::max<std::size_t>(v, 1);
    return v % 2 == 0 ? v + 1 : v;
}

long dpi_check(std::vector<SampleAccess>& samples, const StringTester& tester, double proximity,
               std::size_t votes, Rng& rng) {
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (amplified_test(tester, samples[k], proximity, votes, Aggregation::kMajority, rng) ==
            Verdict::kReject) {
            return static_cast<long>(k);
        }
    }
    return -1;
}

std::size_t tally_queries(const std::vector<SampleAccess>& samples) {
    std::size_t total = 0;
    for (const auto& s : samples) total += s.distinct();
    return total;
}

TesterReport dpi_tester(SampleOracle& oracle, const StringTester& tester, double eps,
                        DpiMode mode, const TesterConstants& constants, std::uint64_t seed) {
    const auto schedule = dpi_schedule(eps, mode, constants);
    const std::size_t votes = dpi_votes(eps, constants);
    Rng rng(seed);
    nlohmann::json trace;
    trace["mode"] = mode == DpiMode::kPlain ? "plain" : "levin";
    trace["votes"] = votes;
    trace["levels"] = nlohmann::json::array();

    std::vector<SampleAccess> all;
    Verdict verdict = Verdict::kAccept;
    for (const auto& level : schedule) {
        // Samples are drawn one at a time so an early reject leaves none unread.
        long bad = -1;
        for (std::size_t k = 0; k < level.samples && bad < 0; ++k) {
            all.emplace_back(oracle, oracle.draw(0, 1).front());
            if (amplified_test(tester, all.back(), level.proximity, votes, Aggregation::kMajority,
                               rng) == Verdict::kReject) {
                bad = static_cast<long>(k);
            }
        }
        trace["levels"].push_back({{"samples", level.samples},
                                   {"proximity", level.proximity},
                                   {"rejected_sample", bad}});
        if (bad >= 0) {
            verdict = Verdict::kReject;
            break;
        }
    }
    return finish_report(oracle, verdict, tally_queries(all), std::move(trace));
}

}  // namespace doho
