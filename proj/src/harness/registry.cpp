#include "doho/harness/registry.hpp"

#include <fstream>
#include <stdexcept>

#include "doho/core/distribution_io.hpp"
#include "doho/core/rng.hpp"
#include "doho/generators/codes.hpp"
#include "doho/generators/families.hpp"
#include "doho/generators/ideal.hpp"
#include "doho/generators/sources.hpp"
#include "doho/std_testers/std_tester.hpp"
#include "doho/testers/cyclic_shift.hpp"
#include "doho/testers/dpi.hpp"
#include "doho/testers/equality_pair.hpp"
#include "doho/testers/fixed_shift.hpp"
#include "doho/testers/graph_iso.hpp"
#include "doho/testers/label_invariant.hpp"
#include "doho/testers/noisy_property.hpp"
#include "doho/testers/perturbation.hpp"
#include "doho/testers/self_correction.hpp"
#include "doho/testers/string_testers.hpp"

#ifndef DOHO_CALIBRATION_DIR
#define DOHO_CALIBRATION_DIR "calibration"
#endif

namespace doho {

namespace {

using Dist = std::shared_ptr<const FiniteDistribution>;

Instance single(FiniteDistribution d) {
    auto p = std::make_shared<const FiniteDistribution>(std::move(d));
    return {{p}, {p}};
}

Instance single_source(SourcePtr s) { return {{std::move(s)}, {nullptr}}; }

BitString bits(const Params& p, std::string_view key) {
    try {
        return BitString::parse(p.text(key));
    } catch (const ParameterError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParameterError("parameter '" + std::string(key) + "': " + e.what());
    }
}

BitString random_bits(Rng& rng, std::size_t n) {
    BitString s(n);
    uniform_string_into(rng, n, s.words());
    return s;
}

/// Uniform string of length n with exactly round(w n) ones.
BitString string_of_weight(Rng& rng, std::size_t n, double w) {
    const auto ones = static_cast<std::size_t>(std::llround(w * static_cast<double>(n)));
    BitString s(n);
    for (std::size_t i : rng.subset(n, std::min(ones, n))) s.set(i, true);
    return s;
}

/// "center" if given, else random of length n ("balanced": true for exactly
/// n/2 ones).
BitString center_param(const Params& p, Rng& rng) {
    if (p.has("center")) return bits(p, "center");
    const std::size_t n = p.count("n");
    if (n == 0) throw ParameterError("parameter 'n' must be positive");
    return p.has("balanced") && p.at("balanced").get<bool>() ? string_of_weight(rng, n, 0.5)
                                                              : random_bits(rng, n);
}

std::vector<BitString> string_list(const Params& p, std::string_view key) {
    std::vector<BitString> out;
    const auto& arr = p.at(key);
    if (!arr.is_array()) throw ParameterError("parameter '" + std::string(key) + "' must be a list");
    for (const auto& s : arr) out.push_back(BitString::parse(s.get<std::string>()));
    return out;
}

BitString graph_param(const Params& p) {
    const std::string g = p.text("graph");
    if (g == "path") return path_graph(p.count("vertices"));
    if (g == "cycle") return cycle_graph(p.count("vertices"));
    return BitString::parse(g);
}

Instance gen_mixture(const Params& p, std::uint64_t seed) {
    const auto& parts = p.at("parts");
    if (!parts.is_array() || parts.empty()) throw ParameterError("mixture: 'parts' must be a list");
    std::vector<std::pair<SourcePtr, double>> sources;
    std::vector<Atom> atoms;
    bool all_explicit = true;
    std::size_t n = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!parts[i].contains("weight")) throw ParameterError("mixture: every part needs a weight");
        const double w = parts[i].at("weight").get<double>();
        const auto inst = make_instance(parts[i], derive_seed(seed, i));
        if (inst.arity() != 1) throw ParameterError("mixture: parts must be single distributions");
        n = inst.n();
        sources.emplace_back(inst.sources[0], w);
        if (inst.explicit_forms[0]) {
            for (const auto& a : inst.explicit_forms[0]->atoms()) atoms.push_back({a.string, a.weight * w});
        } else {
            all_explicit = false;
        }
    }
    auto mixed = std::make_shared<const MixtureSource>(std::move(sources));
    if (!all_explicit) return single_source(mixed);
    return single(FiniteDistribution::from_weighted(n, std::move(atoms), 1e-9));
}

std::vector<GeneratorEntry> build_generators() {
    std::vector<GeneratorEntry> g;
    g.push_back({"point_mass", "point mass on 'string' (or a random n-bit string)",
                 [](const Params& p, std::uint64_t seed) {
                     if (p.has("string")) return single(FiniteDistribution::point_mass(bits(p, "string")));
                     Rng rng(seed);
                     return single(FiniteDistribution::point_mass(center_param(p, rng)));
                 }});
    g.push_back({"uniform", "uniform over the list 'strings'", [](const Params& p, std::uint64_t) {
                     auto s = string_list(p, "strings");
                     if (s.empty()) throw ParameterError("uniform: empty list");
                     const std::size_t n = s.front().size();
                     return single(FiniteDistribution::uniform(n, std::move(s)));
                 }});
    g.push_back({"file", "distribution file at 'path'", [](const Params& p, std::uint64_t) {
                     return single(load_distribution(p.text("path")));
                 }});
    g.push_back({"uniform_random_subset", "uniform over m random strings pairwise >= min_distance apart",
                 [](const Params& p, std::uint64_t seed) {
                     return single(uniform_random_subset(p.count("n"), p.count("m"),
                                                         p.number("min_distance", 0.0), seed));
                 }});
    g.push_back({"ys_mixture", "half uniform on a random m-set S, half uniform on its complement",
                 [](const Params& p, std::uint64_t seed) {
                     const std::size_t n = p.count("n");
                     auto s = p.has("subset") ? string_list(p, "subset")
                                              : random_far_strings(n, p.count("m"), 0.0, seed);
                     if (n <= 16) return single(ys_mixture(n, s));
                     return single_source(std::make_shared<const ComplementMixtureSource>(n, s));
                 }});
    g.push_back({"perturb", "flips of 'center' (or a random n-bit string) at rate eta, at most delta n",
                 [](const Params& p, std::uint64_t seed) {
                     Rng rng(seed);
                     const auto c = center_param(p, rng);
                     const double eta = p.number("eta");
                     const double delta = p.number("delta", 1.0);
                     if (c.size() <= kMaxEnumeratedPerturbBits) return single(perturb_dist(c, eta, delta));
                     return single_source(std::make_shared<const PerturbSource>(c, eta, delta));
                 }});
    g.push_back({"shift", "cyclic shifts of 'center' (or a random string) under 'law' (default uniform)",
                 [](const Params& p, std::uint64_t seed) {
                     Rng rng(seed);
                     const auto c = center_param(p, rng);
                     std::vector<double> law;
                     if (p.has("law")) law = p.at("law").get<std::vector<double>>();
                     return single(shift_dist(c, law));
                 }});
    g.push_back({"iso_copies", "uniformly relabeled copies of 'graph' (path, cycle or adjacency bits)",
                 [](const Params& p, std::uint64_t) { return single(iso_copies_dist(graph_param(p))); }});
    g.push_back({"codewords", "uniform over m random codewords of a Hadamard (k) or random (k, n) code",
                 [](const Params& p, std::uint64_t seed) {
                     const std::size_t k = p.count("k");
                     const std::string kind = p.text("code", "hadamard");
                     const LinearCode code = kind == "hadamard"
                                                 ? hadamard_code(k)
                                                 : random_linear_code(k, p.count("n"), derive_seed(seed, 1));
                     const std::size_t m = p.count("m");
                     if (m == 0 || m > (std::size_t{1} << k)) throw ParameterError("codewords: need 1 <= m <= 2^k");
                     Rng rng(seed);
                     std::vector<BitString> words;
                     for (std::size_t a : rng.subset(std::size_t{1} << k, m)) words.push_back(code.encode(a));
                     return single(FiniteDistribution::uniform(code.n(), std::move(words)));
                 }});
    g.push_back({"weight_classes", "uniform over random strings with the relative weights in 'weights'",
                 [](const Params& p, std::uint64_t seed) {
                     Rng rng(seed);
                     const std::size_t n = p.count("n");
                     std::vector<BitString> s;
                     for (double w : p.at("weights").get<std::vector<double>>()) s.push_back(string_of_weight(rng, n, w));
                     return single(FiniteDistribution::uniform(n, std::move(s)));
                 }});
    g.push_back({"antipodal", "uniform over a random string and its complement",
                 [](const Params& p, std::uint64_t seed) {
                     Rng rng(seed);
                     const auto a = center_param(p, rng);
                     BitString b = a;
                     for (std::size_t i = 0; i < b.size(); ++i) b.flip(i);
                     return single(FiniteDistribution::uniform(a.size(), {a, b}));
                 }});
    g.push_back({"mixture", "weighted mixture of the instances in 'parts'", gen_mixture});
    g.push_back({"pair", "the pair (x, y) of two instances", [](const Params& p, std::uint64_t seed) {
                     const auto x = make_instance(p.at("x"), derive_seed(seed, 0));
                     const auto y = make_instance(p.at("y"), derive_seed(seed, 1));
                     if (x.arity() != 1 || y.arity() != 1 || x.n() != y.n()) {
                         throw ParameterError("pair: x and y must be single distributions of equal length");
                     }
                     return Instance{{x.sources[0], y.sources[0]},
                                     {x.explicit_forms[0], y.explicit_forms[0]}};
                 }});
    return g;
}

const StringTester& string_property(const Params& p) {
    static const LinearityTester linearity;
    static const AllEqualTester all_equal;
    const std::string name = p.text("property", "hadamard");
    if (name == "hadamard") return linearity;
    if (name == "all_equal") return all_equal;
    throw ParameterError("unknown string property '" + name + "'");
}

std::vector<TesterEntry> build_testers() {
    std::vector<TesterEntry> t;
    t.push_back({"doho_support", 1, {"C5", "C6"}, "support size at most m",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     return doho_support_tester(o, p.count("m"), p.number("eps"), c, s);
                 }});
    t.push_back({"doho_grained", 1, {"C1", "C2", "C4"}, "m-grained",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     return doho_grained_tester(o, p.count("m"), p.number("eps"), c, s);
                 }});
    t.push_back({"doho_uniform", 1, {"C1", "C2", "C4"}, "uniform over some m-subset",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     return doho_uniform_tester(o, p.count("m"), p.number("eps"), c, s);
                 }});
    t.push_back({"dpi", 1, {"C15", "C16"}, "support inside a string property ('property')",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     const auto mode = p.text("mode", "plain") == "levin" ? DpiMode::kLevin : DpiMode::kPlain;
                     return dpi_tester(o, string_property(p), p.number("eps"), mode, c, s);
                 }});
    t.push_back({"self_correction", 1, {"C5", "C15", "C16", "C17"},
                 "support at most m inside the Hadamard code",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     static const LinearityTester linearity;
                     const HadamardCorrector corrector(p.number("delta", 0.125));
                     const StdSupportTester inner(p.count("m"), c.support_samples);
                     return self_correction_tester(o, linearity, corrector, inner, p.number("eps"),
                                                   corrector.radius(), c, s);
                 }});
    t.push_back({"equality_pair", 2, {"C3", "C7"}, "X equals Y, support bound m",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     const auto bound = p.text("bound", "both") == "one" ? SupportBound::kOneSide
                                                                         : SupportBound::kBothSides;
                     return equality_pair_tester(o, p.count("m"), p.number("eps"), bound, c, s);
                 }});
    t.push_back({"perturbation", 1, {"C8", "C9", "C10"}, "(eta, delta)-perturbation of some string",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     return perturbation_tester(o, p.number("eta"), p.number("delta"), p.number("eps"), c, s);
                 }});
    t.push_back({"noisy_property", 1, {"C8", "C9", "C10", "C11"},
                 "perturbation of a member of a string property ('property')",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     return noisy_property_tester(o, string_property(p), p.number("eta"),
                                                  p.number("delta"), p.number("eps"), c, s);
                 }});
    t.push_back({"cyclic_shift", 1, {"C12", "C13", "C14"}, "distribution over cyclic shifts of a string",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     const auto mode = p.text("mode", "simple") == "levin" ? CyclicMode::kLevin : CyclicMode::kSimple;
                     return cyclic_shift_tester(o, p.number("eps"), mode, c, s);
                 }});
    t.push_back({"fixed_shift", 1, {"C3", "C7"}, "shifts of a string under a fixed law (default uniform)",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     std::vector<double> law;
                     if (p.has("law")) law = p.at("law").get<std::vector<double>>();
                     return fixed_shift_dist_tester(o, p.number("eps"), law, c, s);
                 }});
    t.push_back({"graph_iso", 1, {"C12"}, "relabeled copies of one graph (exact pairwise check)",
                 [](SampleOracle& o, const Params& p, const TesterConstants& c, std::uint64_t s) {
                     static const ExactIsoTester exact;
                     return graph_iso_dist_tester(o, exact, p.number("eps"), c, s);
                 }});
    return t;
}

}  // namespace

const std::vector<GeneratorEntry>& generators() {
    static const auto all = build_generators();
    return all;
}

const std::vector<TesterEntry>& testers() {
    static const auto all = build_testers();
    return all;
}

const GeneratorEntry& generator_entry(std::string_view id) {
    for (const auto& g : generators()) {
        if (g.id == id) return g;
    }
    throw ParameterError("unknown generator '" + std::string(id) + "'");
}

const TesterEntry& tester_entry(std::string_view id) {
    for (const auto& t : testers()) {
        if (t.id == id) return t;
    }
    throw ParameterError("unknown tester '" + std::string(id) + "'");
}

Instance make_instance(const nlohmann::json& spec, std::uint64_t seed) {
    if (!spec.is_object() || !spec.contains("generator")) {
        throw ParameterError("instance needs a 'generator' field");
    }
    const auto& entry = generator_entry(spec.at("generator").get<std::string>());
    const Params params(spec.value("params", nlohmann::json::object()));
    if (params.has("seed")) seed = static_cast<std::uint64_t>(params.count("seed"));
    return entry.make(params, seed);
}

std::string default_calibration_path() { return std::string(DOHO_CALIBRATION_DIR) + "/defaults.json"; }

TesterConstants calibrated_constants(std::string_view tester_id, const std::string& path) {
    TesterConstants c;
    std::ifstream in(path);
    if (!in) return c;
    const auto j = nlohmann::json::parse(in);
    const auto testers_it = j.find("testers");
    if (testers_it == j.end()) return c;
    const auto entry = testers_it->find(std::string(tester_id));
    if (entry == testers_it->end()) return c;
    for (const auto& [name, value] : entry->at("constants").items()) c.set(name, value.get<double>());
    return c;
}

}  // namespace doho
