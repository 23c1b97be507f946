#include "doho/harness/report_io.hpp"

#include <sstream>

#include "doho/harness/params.hpp"

namespace doho {

nlohmann::json report_to_json(const ExperimentReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) {
        records.push_back({{"trial", r.trial},
                           {"seed", r.seed},
                           {"verdict", std::string(to_string(r.verdict))},
                           {"samples", r.samples},
                           {"queries", r.queries},
                           {"scheduled", r.scheduled},
                           {"n", r.n}});
    }
    const Interval ci = report.accept_interval();
    nlohmann::json aggregates = {{"trials", report.records.size()},
                                 {"accepts", report.accepts()},
                                 {"accept_rate", report.accept_rate()},
                                 {"wilson_low", ci.low},
                                 {"wilson_high", ci.high},
                                 {"mean_queries", report.mean_queries()},
                                 {"max_queries", report.max_queries()},
                                 {"mean_samples", report.mean_samples()},
                                 {"budget_violations", report.budget_violations()},
                                 {"label", report.label}};
    const auto agreement = report.label_agreement();
    aggregates["label_agreement"] = agreement ? nlohmann::json(*agreement) : nlohmann::json(nullptr);
    return {{"version", report.version},
            {"spec", report.spec},
            {"aggregates", aggregates},
            {"records", records}};
}

ExperimentReport report_from_json(const nlohmann::json& j) {
    try {
        ExperimentReport report;
        report.version = j.at("version").get<std::string>();
        report.spec = j.at("spec");
        report.label = j.at("aggregates").at("label").get<std::string>();
        for (const auto& r : j.at("records")) {
            TrialRecord t;
            t.trial = r.at("trial").get<std::size_t>();
            t.seed = r.at("seed").get<std::uint64_t>();
            t.verdict = verdict_from_string(r.at("verdict").get<std::string>());
            t.samples = r.at("samples").get<std::size_t>();
            t.queries = r.at("queries").get<std::size_t>();
            t.scheduled = r.at("scheduled").get<std::size_t>();
            t.n = r.at("n").get<std::size_t>();
            report.records.push_back(t);
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed report: ") + e.what());
    }
}

std::string report_to_csv(const ExperimentReport& report) {
    std::ostringstream out;
    out << "trial,seed,verdict,samples,queries\n";
    for (const auto& r : report.records) {
        out << r.trial << ',' << r.seed << ',' << to_string(r.verdict) << ',' << r.samples << ','
            << r.queries << '\n';
    }
    return out.str();
}

std::string render_report(const ExperimentReport& report, const std::string& format) {
    if (format == "json") return report_to_json(report).dump(2) + "\n";
    if (format == "csv") return report_to_csv(report);
    throw ParameterError("unknown format '" + format + "' (expected csv or json)");
}

}  // namespace doho
