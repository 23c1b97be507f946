#include "doho/core/report.hpp"

#include <stdexcept>

namespace doho {

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::kAccept ? "accept" : "reject";
}

Verdict verdict_from_string(std::string_view text) {
    if (text == "accept") return Verdict::kAccept;
    if (text == "reject") return Verdict::kReject;
    throw std::invalid_argument("unknown verdict: " + std::string(text));
}

std::size_t TesterReport::total_samples() const noexcept {
    std::size_t total = 0;
    for (auto s : samples_used) total += s;
    return total;
}

TesterReport finish_report(const SampleOracle& oracle, Verdict verdict,
                           std::size_t scheduled_queries, nlohmann::json trace) {
    const Budget b = oracle.budget();
    TesterReport r;
    r.verdict = verdict;
    r.samples_used = b.samples;
    r.queries_used = b.queries;
    r.scheduled_queries = scheduled_queries;
    r.trace = std::move(trace);
    return r;
}

}  // namespace doho
