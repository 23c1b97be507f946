#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "doho/testers/constants.hpp"

namespace doho {

/// One certified instance of a calibration suite.
struct Fixture {
    nlohmann::json instance;                 ///< {generator, params}
    bool far = false;                        ///< false: must accept, true: must reject
    nlohmann::json tester_params;            ///< merged over the suite's
};

/// Calibration suite, read from JSON:
///   tester, tester_params, search (constant names, in search order),
///   start ({name: value}; default 4x the built-in default), floor_ratio
///   (lowest value tried = start * floor_ratio), iterations (bisection steps
///   per constant), trials, verify_trials, max_bumps, target_completeness,
///   target_soundness, fixtures [{instance, label: "close" | "far",
///   tester_params}].
struct CalibrationSuite {
    std::string tester;
    nlohmann::json tester_params = nlohmann::json::object();
    std::vector<std::string> search;
    std::map<std::string, double> start;
    double floor_ratio = 1.0 / 64;
    std::size_t iterations = 7;
    std::size_t trials = 200;
    std::size_t verify_trials = 1000;
    std::size_t max_bumps = 6;
    double target_completeness = 0.9;
    double target_soundness = 0.9;
    std::vector<Fixture> fixtures;

    static CalibrationSuite from_json(const nlohmann::json& j);
};

/// Minimum accept rate over close fixtures and minimum reject rate over far
/// fixtures (1 when the side is empty).
struct SuiteRates {
    double completeness = 1;
    double soundness = 1;
};

struct CalibrationResult {
    std::string tester;
    TesterConstants constants;
    std::vector<std::string> searched;
    SuiteRates verified;
    std::size_t verify_trials = 0;
    std::string suite_hash;
    std::uint64_t seed = 0;

    /// {"constants": {name: value} (searched names only), "suite_hash",
    ///  "seed", "completeness", "soundness", "verify_trials"}.
    nlohmann::json to_json() const;
};

/// FNV-1a of the suite's canonical JSON dump, as 16 hex digits.
std::string suite_hash(const nlohmann::json& suite);

/// Rates of `constants` on the suite. Fixture f, trial i runs with seed
/// derive_seed(derive_seed(seed, f), i), so different constants see the same
/// randomness.
SuiteRates evaluate_suite(const CalibrationSuite& suite, const TesterConstants& constants,
                          std::size_t trials, std::uint64_t seed, std::size_t threads = 0);

/// Coordinate-wise geometric bisection for the smallest value of each
/// searched constant meeting both targets at `trials`, then re-verification
/// at `verify_trials` (scaling all searched constants by 1.25 until it
/// passes). Throws ParameterError on an empty suite, a tester mismatch, or
/// targets unreachable within the search bounds.
CalibrationResult calibrate(const std::string& tester_id, const nlohmann::json& suite,
                            std::uint64_t seed, std::size_t threads = 0);

/// Merges `result` into the calibration file at `path` (created if absent).
void write_calibration(const std::string& path, const CalibrationResult& result);

}  // namespace doho
