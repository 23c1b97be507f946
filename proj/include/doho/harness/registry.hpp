#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "doho/core/distribution.hpp"
#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/harness/params.hpp"
#include "doho/testers/constants.hpp"

namespace doho {

/// Generated input: one source per distribution of the tuple, plus the
/// explicit form of each when the generator has one (null otherwise).
struct Instance {
    std::vector<SourcePtr> sources;
    std::vector<std::shared_ptr<const FiniteDistribution>> explicit_forms;

    std::size_t arity() const noexcept { return sources.size(); }
    std::size_t n() const { return sources.front()->n(); }
};

using GeneratorFn = std::function<Instance(const Params&, std::uint64_t seed)>;
using TesterFn = std::function<TesterReport(SampleOracle&, const Params&,
                                            const TesterConstants&, std::uint64_t seed)>;

struct GeneratorEntry {
    std::string id;
    std::string summary;
    GeneratorFn make;
};

struct TesterEntry {
    std::string id;
    std::size_t arity = 1;
    std::vector<std::string> constants;  ///< config names the tester reads
    std::string summary;
    TesterFn run;
};

const std::vector<GeneratorEntry>& generators();
const std::vector<TesterEntry>& testers();
/// Throw ParameterError for unknown ids.
const GeneratorEntry& generator_entry(std::string_view id);
const TesterEntry& tester_entry(std::string_view id);

/// {"generator": id, "params": {...}}. params["seed"], when present,
/// overrides `seed`.
Instance make_instance(const nlohmann::json& spec, std::uint64_t seed);

/// Path of the checked-in calibration file.
std::string default_calibration_path();

/// TesterConstants{} overridden by the calibration file's entry for
/// `tester_id` (unchanged when the file or the entry is missing).
TesterConstants calibrated_constants(std::string_view tester_id,
                                     const std::string& path = default_calibration_path());

}  // namespace doho
