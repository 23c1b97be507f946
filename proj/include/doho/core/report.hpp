#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "doho/core/oracle.hpp"

namespace doho {

enum class Verdict { kAccept, kReject };

std::string_view to_string(Verdict v) noexcept;
Verdict verdict_from_string(std::string_view text);

/// Outcome of one tester invocation.
struct TesterReport {
    Verdict verdict = Verdict::kAccept;
    std::vector<std::size_t> samples_used;  ///< per distribution
    std::size_t queries_used = 0;           ///< oracle's billed count at return
    /// Queries predicted by the tester's documented closed form (or, for
    /// adaptive testers, by its own tally of planned probe positions).
    std::size_t scheduled_queries = 0;
    /// Structured diagnostics: index sets, collision patterns, statistics.
    nlohmann::json trace = nlohmann::json::object();

    bool accepted() const noexcept { return verdict == Verdict::kAccept; }
    std::size_t total_samples() const noexcept;

    friend bool operator==(const TesterReport&, const TesterReport&) = default;
};

/// Fills the budget fields from the oracle at return time.
TesterReport finish_report(const SampleOracle& oracle, Verdict verdict,
                           std::size_t scheduled_queries, nlohmann::json trace);

}  // namespace doho
