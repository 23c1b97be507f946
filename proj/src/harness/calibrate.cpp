#include "doho/harness/calibrate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "doho/core/rng.hpp"
#include "doho/harness/experiment.hpp"
#include "doho/harness/params.hpp"
#include "doho/harness/registry.hpp"

namespace doho {

namespace {

/// Rounds up to two significant digits.
double round_up_2sig(double v) {
    const double scale = std::pow(10.0, std::floor(std::log10(v)) - 1);
    return std::ceil(v / scale - 1e-9) * scale;
}

bool meets(const CalibrationSuite& s, const SuiteRates& r) {
    return r.completeness >= s.target_completeness && r.soundness >= s.target_soundness;
}

}  // namespace

CalibrationSuite CalibrationSuite::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("calibration suite must be a JSON object");
    try {
        CalibrationSuite s;
        s.tester = j.value("tester", "");
        s.tester_params = j.value("tester_params", nlohmann::json::object());
        s.search = j.value("search", std::vector<std::string>{});
        s.start = j.value("start", std::map<std::string, double>{});
        s.floor_ratio = j.value("floor_ratio", s.floor_ratio);
        s.iterations = j.value("iterations", s.iterations);
        s.trials = j.value("trials", s.trials);
        s.verify_trials = j.value("verify_trials", s.verify_trials);
        s.max_bumps = j.value("max_bumps", s.max_bumps);
        s.target_completeness = j.value("target_completeness", s.target_completeness);
        s.target_soundness = j.value("target_soundness", s.target_soundness);
        for (const auto& f : j.value("fixtures", nlohmann::json::array())) {
            Fixture fx;
            fx.instance = f.at("instance");
            const std::string label = f.at("label").get<std::string>();
            if (label != "close" && label != "far") {
                throw ParameterError("fixture label must be 'close' or 'far', got '" + label + "'");
            }
            fx.far = label == "far";
            fx.tester_params = f.value("tester_params", nlohmann::json::object());
            s.fixtures.push_back(std::move(fx));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed calibration suite: ") + e.what());
    }
}

nlohmann::json CalibrationResult::to_json() const {
    nlohmann::json values = nlohmann::json::object();
    for (const auto& name : searched) values[name] = constants.get(name);
    return {{"constants", values},
            {"suite_hash", suite_hash},
            {"seed", seed},
            {"completeness", verified.completeness},
            {"soundness", verified.soundness},
            {"verify_trials", verify_trials}};
}

std::string suite_hash(const nlohmann::json& suite) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : suite.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SuiteRates evaluate_suite(const CalibrationSuite& suite, const TesterConstants& constants,
                          std::size_t trials, std::uint64_t seed, std::size_t threads) {
    const auto& tester = tester_entry(suite.tester);
    SuiteRates rates;
    for (std::size_t f = 0; f < suite.fixtures.size(); ++f) {
        const auto& fx = suite.fixtures[f];
        const std::uint64_t fseed = derive_seed(seed, f);
        const Instance instance = make_instance(fx.instance, derive_seed(fseed, ~std::uint64_t{0}));
        nlohmann::json params = suite.tester_params;
        params.merge_patch(fx.tester_params);
        const Params p(params);
        const auto records = run_pool(trials, threads, [&](std::size_t i) {
            return run_trial(tester, p, constants, instance, i, derive_seed(fseed, i));
        });
        std::size_t accepts = 0;
        for (const auto& r : records) accepts += r.verdict == Verdict::kAccept;
        const double rate = trials == 0 ? 0.0 : static_cast<double>(accepts) / static_cast<double>(trials);
        if (fx.far) {
            rates.soundness = std::min(rates.soundness, 1.0 - rate);
        } else {
            rates.completeness = std::min(rates.completeness, rate);
        }
    }
    return rates;
}

CalibrationResult calibrate(const std::string& tester_id, const nlohmann::json& suite_json,
                            std::uint64_t seed, std::size_t threads) {
    CalibrationSuite suite = CalibrationSuite::from_json(suite_json);
    if (!suite.tester.empty() && suite.tester != tester_id) {
        throw ParameterError("suite is for tester '" + suite.tester + "', not '" + tester_id + "'");
    }
    suite.tester = tester_id;
    const auto& entry = tester_entry(tester_id);
    if (suite.fixtures.empty()) throw ParameterError("calibration suite has no fixtures");
    if (suite.trials == 0 || suite.verify_trials == 0) throw ParameterError("trial counts must be positive");
    if (suite.search.empty()) suite.search = entry.constants;

    TesterConstants c;
    try {
        for (const auto& name : suite.search) {
            const auto it = suite.start.find(name);
            c.set(name, it != suite.start.end() ? it->second : 4 * c.get(name));
        }
    } catch (const std::invalid_argument& e) {
        throw ParameterError(e.what());
    }
    if (!meets(suite, evaluate_suite(suite, c, suite.trials, seed, threads))) {
        throw ParameterError("targets unreachable: start constants for '" + tester_id +
                             "' miss the targets");
    }

    for (const auto& name : suite.search) {
        double hi = c.get(name);
        double lo = hi * suite.floor_ratio;
        TesterConstants probe = c;
        probe.set(name, lo);
        if (meets(suite, evaluate_suite(suite, probe, suite.trials, seed, threads))) {
            hi = lo;
        } else {
            for (std::size_t it = 0; it < suite.iterations; ++it) {
                const double mid = std::sqrt(lo * hi);
                probe.set(name, mid);
                if (meets(suite, evaluate_suite(suite, probe, suite.trials, seed, threads))) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
        c.set(name, round_up_2sig(hi));
    }

    CalibrationResult result;
    result.tester = tester_id;
    result.searched = suite.search;
    result.seed = seed;
    result.suite_hash = suite_hash(suite_json);
    result.verify_trials = suite.verify_trials;
    const std::uint64_t verify_seed = derive_seed(seed, 0x7e41f1);
    for (std::size_t bump = 0;; ++bump) {
        result.verified = evaluate_suite(suite, c, suite.verify_trials, verify_seed, threads);
        if (meets(suite, result.verified)) break;
        if (bump == suite.max_bumps) {
            throw ParameterError("targets unreachable: verification failed after " +
                                 std::to_string(bump) + " scale-ups");
        }
        for (const auto& name : suite.search) c.set(name, round_up_2sig(c.get(name) * 1.25));
    }
    result.constants = c;
    return result;
}

void write_calibration(const std::string& path, const CalibrationResult& result) {
    nlohmann::json file = {{"testers", nlohmann::json::object()}};
    if (std::ifstream in(path); in) {
        try {
            file = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw ParameterError("calibration file " + path + " is not valid JSON: " + e.what());
        }
        if (!file.contains("testers")) file["testers"] = nlohmann::json::object();
    }
    file["testers"][result.tester] = result.to_json();
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write " + path);
    out << file.dump(2) << "\n";
}

}  // namespace doho
