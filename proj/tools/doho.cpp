// doho: command-line front end of the toolkit.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "doho/core/distribution_io.hpp"
#include "doho/distances/emd.hpp"
#include "doho/distances/metric.hpp"
#include "doho/distances/support_distance.hpp"
#include "doho/harness/calibrate.hpp"
#include "doho/harness/experiment.hpp"
#include "doho/harness/params.hpp"
#include "doho/harness/registry.hpp"
#include "doho/harness/report_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw doho::ParameterError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw doho::ParameterError(path + ": " + e.what());
    }
}

doho::FiniteDistribution load(const std::string& path) {
    if (!std::filesystem::exists(path)) throw doho::ParameterError("cannot open " + path);
    return doho::load_distribution(path);
}

void print_number(double v) { std::printf("%.12g\n", v); }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw doho::ParameterError("cannot write " + path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Testers for distributions over huge objects"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", doho::toolkit_version());

    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::string format = "json";
    std::size_t threads = 0;
    app.add_option("--seed", seed, "Master seed (overrides the experiment file)");
    app.add_option("--trials", trials, "Trial count (overrides the experiment file)");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "Worker threads, 0 = all cores");

    auto* run = app.add_subcommand("run", "Run an experiment spec");
    std::string spec_file, output;
    run->add_option("spec", spec_file, "Experiment file (JSON)")->required();
    run->add_option("-o,--output", output, "Report path (default: the experiment's output, else stdout)");

    auto* cal = app.add_subcommand("calibrate", "Calibrate a tester's constants on a fixture suite");
    std::string cal_tester, suite_file, cal_out = doho::default_calibration_path();
    bool dry = false;
    cal->add_option("tester", cal_tester, "Tester id")->required();
    cal->add_option("suite", suite_file, "Fixture suite (JSON)")->required();
    cal->add_option("-o,--output", cal_out, "Calibration file to update");
    cal->add_flag("--dry-run", dry, "Print the result without writing");

    auto* dist = app.add_subcommand("dist", "Exact distance between distribution files");
    std::string kind, first, second, metric = "hamming";
    dist->add_option("kind", kind, "emd | tv | support")
        ->required()
        ->check(CLI::IsMember({"emd", "tv", "support"}));
    dist->add_option("first", first, "Distribution file")->required();
    dist->add_option("second", second, "Distribution file, or m for support")->required();
    dist->add_option("--metric", metric, "Ground metric for emd")
        ->check(CLI::IsMember({"hamming", "inequality"}));

    auto* gen = app.add_subcommand("gen", "Write a generated distribution to a file");
    std::string gen_id, gen_out;
    std::vector<std::string> assignments;
    gen->add_option("generator", gen_id, "Generator id")->required();
    gen->add_option("params", assignments, "key=value parameters");
    gen->add_option("-o,--output", gen_out, "Distribution file")->required();

    auto* val = app.add_subcommand("validate", "Check a distribution file");
    std::string val_file;
    val->add_option("file", val_file, "Distribution file")->required();

    auto* list = app.add_subcommand("list", "List testers and generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*run) {
            auto spec = doho::ExperimentSpec::from_json(read_json_file(spec_file));
            if (seed) spec.seed = *seed;
            if (trials) spec.trials = *trials;
            spec.threads = threads;
            const auto report = doho::run_experiment(spec);
            write_text(output.empty() ? spec.output : output, doho::render_report(report, format));
            return kOk;
        }
        if (*cal) {
            const auto result =
                doho::calibrate(cal_tester, read_json_file(suite_file), seed.value_or(1), threads);
            if (!dry) doho::write_calibration(cal_out, result);
            std::cout << result.to_json().dump(2) << "\n";
            return kOk;
        }
        if (*dist) {
            const auto p = load(first);
            if (kind == "support") {
                std::size_t m = 0;
                try {
                    std::size_t used = 0;
                    m = std::stoul(second, &used);
                    if (used != second.size()) throw std::invalid_argument(second);
                } catch (const std::exception&) {
                    throw doho::ParameterError("support needs an integer m, got '" + second + "'");
                }
                print_number(doho::dist_to_support_m(p, m).value);
                return kOk;
            }
            const auto q = load(second);
            if (kind == "tv") {
                print_number(doho::tv(p, q));
            } else {
                const auto g = metric == "hamming" ? doho::GroundMetric::kRelativeHamming
                                                   : doho::GroundMetric::kInequality;
                print_number(doho::emd(p, q, g).value);
            }
            return kOk;
        }
        if (*gen) {
            nlohmann::json params = nlohmann::json::object();
            for (const auto& a : assignments) doho::parse_assignment(a, params);
            const auto instance = doho::make_instance({{"generator", gen_id}, {"params", params}},
                                                      seed.value_or(1));
            if (instance.arity() != 1) {
                throw doho::ParameterError("generator '" + gen_id + "' yields a tuple; gen writes one distribution");
            }
            if (!instance.explicit_forms[0]) {
                throw doho::ParameterError("generator '" + gen_id +
                                           "' has no explicit form at these parameters");
            }
            doho::save_distribution(gen_out, *instance.explicit_forms[0]);
            return kOk;
        }
        if (*val) {
            if (!std::filesystem::exists(val_file)) throw doho::ParameterError("cannot open " + val_file);
            try {
                const auto d = doho::load_distribution(val_file);
                std::cout << "ok n=" << d.n() << " atoms=" << d.support_size() << "\n";
                return kOk;
            } catch (const doho::DistributionFormatError& e) {
                std::cerr << "invalid: " << e.what() << "\n";
                return kInvalid;
            }
        }
        if (*list) {
            std::cout << "testers:\n";
            for (const auto& t : doho::testers()) std::cout << "  " << t.id << "  " << t.summary << "\n";
            std::cout << "generators:\n";
            for (const auto& g : doho::generators()) std::cout << "  " << g.id << "  " << g.summary << "\n";
            return kOk;
        }
    } catch (const doho::DistributionFormatError& e) {
        std::cerr << "invalid distribution: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
