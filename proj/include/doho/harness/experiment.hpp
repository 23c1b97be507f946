#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "doho/core/report.hpp"
#include "doho/harness/registry.hpp"
#include "doho/harness/stats.hpp"

namespace doho {

/// Declarative Monte Carlo experiment, read from JSON:
///   name, tester, tester_params, instance {generator, params}, trials,
///   seed, label ("none" | "accept" | "reject" | "emd_support"),
///   label_params ({m, eps} for emd_support), constants (overrides),
///   threads (0 = hardware), output.
struct ExperimentSpec {
    std::string name = "experiment";
    std::string tester;
    nlohmann::json tester_params = nlohmann::json::object();
    nlohmann::json instance = nlohmann::json::object();
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    std::string label = "none";
    nlohmann::json label_params = nlohmann::json::object();
    nlohmann::json constants = nlohmann::json::object();
    std::size_t threads = 0;
    std::string output;

    static ExperimentSpec from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    Verdict verdict = Verdict::kAccept;
    std::size_t samples = 0;
    std::size_t queries = 0;
    std::size_t scheduled = 0;
    std::size_t n = 0;

    /// queries == scheduled and samples <= queries <= samples * n.
    bool budget_ok() const noexcept {
        return queries == scheduled && samples <= queries && queries <= samples * n;
    }
};

struct ExperimentReport {
    nlohmann::json spec;
    std::string version;
    std::vector<TrialRecord> records;  ///< sorted by trial index
    std::string label = "none";        ///< expected verdict, when known

    std::size_t accepts() const noexcept;
    double accept_rate() const noexcept;
    Interval accept_interval() const;
    double mean_queries() const noexcept;
    std::size_t max_queries() const noexcept;
    double mean_samples() const noexcept;
    std::size_t budget_violations() const noexcept;
    /// Fraction of trials whose verdict equals the label (label must be
    /// "accept" or "reject").
    std::optional<double> label_agreement() const;
};

std::string toolkit_version();

/// Seed of trial `index`: derive_seed(seed, index). Trial i uses
/// derive_seed(trial_seed, 0) for the oracle and derive_seed(trial_seed, 1)
/// for the tester.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t index);

/// Runs body(i) for i in [0, count) on `threads` workers (0 = hardware
/// concurrency) and returns the results in index order.
std::vector<TrialRecord> run_pool(std::size_t count, std::size_t threads,
                                  const std::function<TrialRecord(std::size_t)>& body);

/// One tester invocation on a fresh oracle over `instance`.
TrialRecord run_trial(const TesterEntry& tester, const Params& params,
                      const TesterConstants& constants, const Instance& instance,
                      std::size_t index, std::uint64_t seed);

/// Builds the instance from derive_seed(spec.seed, ~0) (unless the instance
/// params carry their own seed), runs the trials and aggregates. Throws
/// ParameterError for unknown ids or bad parameters.
ExperimentReport run_experiment(const ExperimentSpec& spec);

}  // namespace doho
