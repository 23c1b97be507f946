#include "doho/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "doho/core/billed_oracle.hpp"
#include "doho/core/rng.hpp"
#include "doho/distances/support_distance.hpp"

#ifndef DOHO_VERSION
#define DOHO_VERSION "0.0.0"
#endif

namespace doho {

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* key, T fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    try {
        return it->get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParameterError(std::string("spec field '") + key + "' has the wrong type");
    }
}

std::string compute_label(const ExperimentSpec& spec, const Instance& instance) {
    if (spec.label == "none" || spec.label == "accept" || spec.label == "reject") return spec.label;
    if (spec.label != "emd_support") throw ParameterError("unknown label '" + spec.label + "'");
    if (instance.arity() != 1 || !instance.explicit_forms[0]) {
        throw ParameterError("emd_support label needs one explicit distribution");
    }
    const Params p(spec.label_params);
    const double d = dist_to_support_m(*instance.explicit_forms[0], p.count("m")).value;
    if (d <= 1e-12) return "accept";
    if (d > p.number("eps")) return "reject";
    return "none";
}

}  // namespace

ExperimentSpec ExperimentSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("experiment spec must be a JSON object");
    ExperimentSpec s;
    s.name = field<std::string>(j, "name", s.name);
    s.tester = field<std::string>(j, "tester", "");
    if (s.tester.empty()) throw ParameterError("spec needs a 'tester'");
    s.tester_params = j.value("tester_params", nlohmann::json::object());
    if (!j.contains("instance")) throw ParameterError("spec needs an 'instance'");
    s.instance = j.at("instance");
    s.trials = field<std::size_t>(j, "trials", s.trials);
    s.seed = field<std::uint64_t>(j, "seed", s.seed);
    s.label = field<std::string>(j, "label", s.label);
    s.label_params = j.value("label_params", nlohmann::json::object());
    s.constants = j.value("constants", nlohmann::json::object());
    s.threads = field<std::size_t>(j, "threads", s.threads);
    s.output = field<std::string>(j, "output", "");
    return s;
}

nlohmann::json ExperimentSpec::to_json() const {
    return {{"name", name},       {"tester", tester},     {"tester_params", tester_params},
            {"instance", instance}, {"trials", trials},   {"seed", seed},
            {"label", label},     {"label_params", label_params},
            {"constants", constants}, {"threads", threads}, {"output", output}};
}

std::size_t ExperimentReport::accepts() const noexcept {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.verdict == Verdict::kAccept;
    }));
}

double ExperimentReport::accept_rate() const noexcept {
    return records.empty() ? 0.0
                           : static_cast<double>(accepts()) / static_cast<double>(records.size());
}

Interval ExperimentReport::accept_interval() const {
    return wilson_interval(accepts(), records.size());
}

double ExperimentReport::mean_queries() const noexcept {
    if (records.empty()) return 0;
    double total = 0;
    for (const auto& r : records) total += static_cast<double>(r.queries);
    return total / static_cast<double>(records.size());
}

std::size_t ExperimentReport::max_queries() const noexcept {
    std::size_t m = 0;
    for (const auto& r : records) m = std::max(m, r.queries);
    return m;
}

double ExperimentReport::mean_samples() const noexcept {
    if (records.empty()) return 0;
    double total = 0;
    for (const auto& r : records) total += static_cast<double>(r.samples);
    return total / static_cast<double>(records.size());
}

std::size_t ExperimentReport::budget_violations() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.budget_ok(); }));
}

std::optional<double> ExperimentReport::label_agreement() const {
    if (label != "accept" && label != "reject") return std::nullopt;
    const double rate = accept_rate();
    return label == "accept" ? rate : 1.0 - rate;
}

std::string toolkit_version() { return DOHO_VERSION; }

std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) { return derive_seed(seed, index); }

std::vector<TrialRecord> run_pool(std::size_t count, std::size_t threads,
                                  const std::function<TrialRecord(std::size_t)>& body) {
    std::vector<TrialRecord> out(count);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                out[i] = body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

TrialRecord run_trial(const TesterEntry& tester, const Params& params,
                      const TesterConstants& constants, const Instance& instance,
                      std::size_t index, std::uint64_t seed) {
    if (instance.arity() != tester.arity) {
        throw ParameterError("tester '" + tester.id + "' needs " + std::to_string(tester.arity) +
                             " distribution(s), instance has " + std::to_string(instance.arity()));
    }
    BilledOracle oracle(instance.sources, derive_seed(seed, 0));
    const auto report = tester.run(oracle, params, constants, derive_seed(seed, 1));
    TrialRecord r;
    r.trial = index;
    r.seed = seed;
    r.verdict = report.verdict;
    r.samples = report.total_samples();
    r.queries = report.queries_used;
    r.scheduled = report.scheduled_queries;
    r.n = instance.n();
    return r;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    const auto& tester = tester_entry(spec.tester);
    const Params params(spec.tester_params);
    TesterConstants constants = calibrated_constants(spec.tester);
    if (!spec.constants.is_object()) throw ParameterError("'constants' must be an object");
    try {
        for (const auto& [name, value] : spec.constants.items()) constants.set(name, value.get<double>());
    } catch (const std::invalid_argument& e) {
        throw ParameterError(e.what());
    }
    const Instance instance = make_instance(spec.instance, derive_seed(spec.seed, ~std::uint64_t{0}));

    ExperimentReport report;
    report.spec = spec.to_json();
    report.version = toolkit_version();
    report.label = compute_label(spec, instance);
    try {
        report.records = run_pool(spec.trials, spec.threads, [&](std::size_t i) {
            return run_trial(tester, params, constants, instance, i, trial_seed(spec.seed, i));
        });
    } catch (const std::invalid_argument& e) {
        throw ParameterError(std::string("tester '") + spec.tester + "': " + e.what());
    }
    return report;
}

}  // namespace doho
