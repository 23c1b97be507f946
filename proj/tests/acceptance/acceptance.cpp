// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Testers run with the calibrated constants.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "doho/core/rng.hpp"
#include "doho/distances/emd.hpp"
#include "doho/distances/grain_round.hpp"
#include "doho/harness/experiment.hpp"
#include "doho/harness/registry.hpp"
#include "doho/std_testers/equality.hpp"
#include "oracles.hpp"

using namespace doho;
using json = nlohmann::json;

namespace {

constexpr double kRateTarget = 0.66;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Budget bookkeeping shared by criteria 2-8 and reported by criterion 9.
struct BudgetLedger {
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::size_t closed_form_mismatches = 0;
};
BudgetLedger g_budget;

using Check = std::function<bool(const TrialRecord&)>;

ExperimentReport run(const std::string& tester, const json& params, const json& instance,
                     std::size_t trials, std::uint64_t seed, const Check& closed_form = {}) {
    ExperimentSpec spec;
    spec.name = tester;
    spec.tester = tester;
    spec.tester_params = params;
    spec.instance = instance;
    spec.trials = trials;
    spec.seed = seed;
    auto report = run_experiment(spec);
    g_budget.trials += report.records.size();
    g_budget.violations += report.budget_violations();
    if (closed_form) {
        for (const auto& r : report.records) g_budget.closed_form_mismatches += !closed_form(r);
    }
    return report;
}

// The explicit form run_experiment builds for spec seed `seed`.
FiniteDistribution instance_form(const json& instance, std::uint64_t seed, std::size_t index = 0) {
    const auto inst = make_instance(instance, derive_seed(seed, ~std::uint64_t{0}));
    return *inst.explicit_forms.at(index);
}

double accept_lower(const ExperimentReport& r) { return r.accept_interval().low; }
double reject_lower(const ExperimentReport& r) {
    return wilson_interval(r.records.size() - r.accepts(), r.records.size()).low;
}

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double tv_direct(const FiniteDistribution& p, const FiniteDistribution& q) {
    std::map<BitString, double> diff;
    for (const auto& a : p.atoms()) diff[a.string] += a.weight;
    for (const auto& a : q.atoms()) diff[a.string] -= a.weight;
    double s = 0;
    for (const auto& [k, v] : diff) s += std::abs(v);
    return s / 2;
}

double l2_squared(const FiniteDistribution& p, const FiniteDistribution& q) {
    std::map<BitString, double> diff;
    for (const auto& a : p.atoms()) diff[a.string] += a.weight;
    for (const auto& a : q.atoms()) diff[a.string] -= a.weight;
    double s = 0;
    for (const auto& [k, v] : diff) s += v * v;
    return s;
}

std::vector<std::size_t> random_positions(Rng& rng, std::size_t n, std::size_t ell) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (std::size_t i = 0; i < ell; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
    all.resize(ell);
    std::sort(all.begin(), all.end());
    return all;
}

std::size_t ceil_size(double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); }

// 1. emd under the inequality metric equals tv; Hamming emd never exceeds it.
Outcome emd_tv() {
    Rng rng(101);
    double worst_ineq = 0, worst_ham = -1;
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + rng.below(8);
        const std::size_t cap = std::min<std::size_t>(6, std::size_t{1} << n);
        const auto p = testing::random_distribution(rng, n, 1 + rng.below(cap));
        const auto q = testing::random_distribution(rng, n, 1 + rng.below(cap));
        const double d = tv_direct(p, q);
        worst_ineq = std::max(worst_ineq, std::abs(emd(p, q, GroundMetric::kInequality).value - d));
        worst_ham = std::max(worst_ham, emd(p, q, GroundMetric::kRelativeHamming).value - d);
    }
    return {worst_ineq <= 1e-9 && worst_ham <= 1e-9,
            "1000 pairs, max |emd_ineq - tv| = " + fmt("%.2e", worst_ineq) +
                ", max emd_ham - tv = " + fmt("%.2e", worst_ham)};
}

// 2. The support tester never rejects a distribution with support <= m.
Outcome one_sided() {
    const std::size_t m = 8;
    const double eps = 0.25;
    const auto c = calibrated_constants("doho_support");
    const json params{{"m", m}, {"eps", eps}};
    const auto closed_form = [&](const TrialRecord& r) {
        const std::size_t s = ceil_size(c.support_samples * static_cast<double>(m) / eps);
        const std::size_t ell = std::min(r.n, std::max<std::size_t>(1, ceil_size(c.support_positions / eps * std::log(m + 1.0))));
        return r.samples == s && r.queries == s * ell;
    };
    std::vector<json> fixtures;
    for (std::size_t k : {1u, 2u, 3u, 5u, 8u}) {
        fixtures.push_back({{"generator", "uniform_random_subset"},
                            {"params", {{"n", 128}, {"m", k}, {"min_distance", 0.3}}}});
    }
    fixtures.push_back({{"generator", "uniform_random_subset"},
                        {"params", {{"n", 256}, {"m", 8}, {"min_distance", 0.0}}}});
    fixtures.push_back({{"generator", "uniform_random_subset"},
                        {"params", {{"n", 16}, {"m", 8}, {"min_distance", 0.0}}}});
    fixtures.push_back({{"generator", "codewords"}, {"params", {{"k", 7}, {"m", 8}}}});
    fixtures.push_back({{"generator", "shift"}, {"params", {{"n", 64}, {"law", [] {
                            std::vector<double> law(64, 0.0);
                            law[0] = 0.5; law[5] = 0.3; law[17] = 0.2;
                            return law;
                        }()}}}});
    fixtures.push_back({{"generator", "mixture"}, {"params", {{"parts", {
                            {{"generator", "point_mass"}, {"params", {{"n", 64}}}, {"weight", 0.9}},
                            {{"generator", "uniform_random_subset"}, {"params", {{"n", 64}, {"m", 7}, {"min_distance", 0.01}}}, {"weight", 0.1}}}}}}});
    std::size_t rejects = 0, total = 0;
    for (std::size_t f = 0; f < fixtures.size(); ++f) {
        const auto r = run("doho_support", params, fixtures[f], 1000, 2000 + f, closed_form);
        rejects += r.records.size() - r.accepts();
        total += r.records.size();
    }
    return {rejects == 0, std::to_string(total) + " trials on " + std::to_string(fixtures.size()) +
                              " fixtures, " + std::to_string(rejects) + " rejections"};
}

// 3. Uniform over 2m pairwise-far strings is rejected.
Outcome support_soundness() {
    const json instance{{"generator", "uniform_random_subset"},
                        {"params", {{"n", 128}, {"m", 16}, {"min_distance", 0.3}}}};
    const auto r = run("doho_support", {{"m", 8}, {"eps", 0.25}}, instance, 1000, 3001);
    const double low = reject_lower(r);
    return {low >= kRateTarget, "reject rate " + fmt("%.3f", 1 - r.accept_rate()) +
                                    ", Wilson lower " + fmt("%.3f", low)};
}

// 4. emd of the restrictions to a random J stays >= 0.3 eps.
Outcome projection_preservation() {
    const double eps = 0.2;
    const std::size_t m = 6;
    const auto c = calibrated_constants("equality_pair");
    Rng rng(404);
    std::size_t pairs = 0;
    double worst = 1;
    std::size_t ell_used = 0;
    while (pairs < 20) {
        const std::size_t n = pairs % 2 ? 64 : 32;
        const auto x = testing::random_distribution(rng, n, 1 + rng.below(m));
        // y: each atom of x moved by 20%-30% of its bits, fresh weights; only
        // pairs with eps < emd <= 1.5 eps are kept
        std::vector<BitString> moved;
        for (const auto& a : x.atoms()) {
            BitString s = a.string;
            const auto flips = random_positions(rng, n, n / 5 + rng.below(n / 10 + 1));
            for (auto i : flips) s.flip(i);
            moved.push_back(s);
        }
        const auto y = testing::random_over(rng, moved, 1 + rng.below(moved.size()));
        const double d = emd(x, y).value;
        if (d <= eps || d > 1.5 * eps) continue;
        ++pairs;
        const std::size_t ell =
            std::min(n, std::max<std::size_t>(1, ceil_size(c.equality_positions / eps * std::log(m + 1.0))));
        ell_used = std::max(ell_used, ell);
        std::size_t good = 0;
        for (int t = 0; t < 200; ++t) {
            const auto j = random_positions(rng, n, ell);
            good += emd(x.restricted(j), y.restricted(j)).value >= 0.3 * eps;
        }
        worst = std::min(worst, good / 200.0);
    }
    return {worst >= 0.9, "20 pairs, |J| <= " + std::to_string(ell_used) +
                              ", min fraction of J preserving 0.3 eps = " + fmt("%.3f", worst)};
}

// 5. Equality of pairs at n = 128, m = 8.
Outcome equality() {
    const std::size_t m = 8;
    const double eps = 0.2;
    const auto c = calibrated_constants("equality_pair");
    const json params{{"m", m}, {"eps", eps}, {"bound", "both"}};
    const auto closed_form = [&](const TrialRecord& r) {
        const std::size_t ell = std::min(r.n, std::max<std::size_t>(1, ceil_size(c.equality_positions / eps * std::log(m + 1.0))));
        return r.queries == r.samples * ell;
    };
    auto side = [](int seed) {
        return json{{"generator", "uniform_random_subset"},
                    {"params", {{"n", 128}, {"m", 8}, {"min_distance", 0.4}, {"seed", seed}}}};
    };
    const json same{{"generator", "pair"}, {"params", {{"x", side(501)}, {"y", side(501)}}}};
    const json far{{"generator", "pair"}, {"params", {{"x", side(501)}, {"y", side(502)}}}};
    const double certificate = emd(instance_form(side(501), 0), instance_form(side(502), 0)).value;
    const auto in = run("equality_pair", params, same, 1000, 5001, closed_form);
    const auto out = run("equality_pair", params, far, 1000, 5002, closed_form);
    const double a = accept_lower(in), r = reject_lower(out);
    return {a >= kRateTarget && r >= kRateTarget && certificate > 0.2,
            "identical accept lower " + fmt("%.3f", a) + ", far (emd " + fmt("%.3f", certificate) +
                ") reject lower " + fmt("%.3f", r)};
}

// 6. Grain rounding is exactly grained and within its distance bound.
Outcome grain_rounding() {
    Rng rng(606);
    std::size_t bad_grain = 0, bad_distance = 0;
    double worst_slack = 1;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = t % 2 ? 16 : 8;
        const std::size_t lg = static_cast<std::size_t>(std::floor(std::log2(static_cast<double>(n))));
        const std::size_t offset = rng.below(max_grain_offset(n) + 1);
        const auto p = testing::random_distribution(rng, n, 1 + rng.below(6));
        const auto g = grain_round(p, offset);
        const double grain = std::ldexp(1.0, static_cast<int>(n - offset));
        for (const auto& a : g.atoms()) {
            const double units = a.weight * grain;
            bad_grain += units != std::floor(units);
        }
        const double bound = static_cast<double>(lg) / static_cast<double>(n) +
                             std::ldexp(1.0, -static_cast<int>(lg - offset));
        const double d = emd(p, g).value;
        bad_distance += d > bound + 1e-12;
        worst_slack = std::min(worst_slack, bound - d);
    }
    return {bad_grain == 0 && bad_distance == 0,
            "100 distributions, " + std::to_string(bad_grain) + " off-grain weights, " +
                std::to_string(bad_distance) + " bound violations, min slack " + fmt("%.4f", worst_slack)};
}

// 7. Perturbation, cyclic-shift and uniform-shift testers at eps = 0.25.
Outcome ideal_objects() {
    const double eps = 0.25;
    std::vector<std::string> parts;
    bool pass = true;
    double worst = 1;
    auto expect = [&](const std::string& what, double lower) {
        worst = std::min(worst, lower);
        if (lower < kRateTarget) {
            pass = false;
            parts.push_back(what + " " + fmt("%.3f", lower));
        }
    };

    // Perturbation family: eta = 0.1, delta = 0.2.
    const json perturb_params{{"eta", 0.1}, {"delta", 0.2}, {"eps", eps}};
    for (double eta : {0.05, 0.1}) {
        const json in{{"generator", "perturb"}, {"params", {{"n", 128}, {"eta", eta}, {"delta", 0.2}}}};
        expect("perturb in", accept_lower(run("perturbation", perturb_params, in, 500, 7100 + std::lround(eta * 100))));
    }
    {
        // A member lives in a 0.2-ball around some x*; the two antipodes sum
        // to distance 1 from x*, so emd >= (1 - 2 * 0.2) / 2 = 0.3.
        const json far{{"generator", "antipodal"}, {"params", {{"n", 64}}}};
        const auto form = instance_form(far, 7120);
        const auto& at = form.atoms();
        const bool antipodal = at.size() == 2 && at[0].string.hamming(at[1].string) == form.n();
        if (!antipodal || (1 - 2 * 0.2) / 2 <= eps) pass = false;
        expect("perturb far", reject_lower(run("perturbation", perturb_params, far, 500, 7120)));
    }

    // Distributions over cyclic shifts of one string.
    for (const char* mode : {"simple", "levin"}) {
        const json params{{"eps", eps}, {"mode", mode}};
        const json in{{"generator", "shift"}, {"params", {{"n", 128}}}};
        expect(std::string("cyclic in ") + mode, accept_lower(run("cyclic_shift", params, in, 500, 7200)));
        // Shifts keep the weight, so emd >= |w1 - w2| / 2 for two strings of
        // relative weights w1, w2.
        const json far{{"generator", "weight_classes"}, {"params", {{"n", 128}, {"weights", {0.2, 0.8}}}}};
        const auto form = instance_form(far, 7201);
        const double w1 = static_cast<double>(form.atoms()[0].string.popcount()) / 128;
        const double w2 = static_cast<double>(form.atoms()[1].string.popcount()) / 128;
        if (std::abs(w1 - w2) / 2 <= eps) pass = false;
        expect(std::string("cyclic far ") + mode, reject_lower(run("cyclic_shift", params, far, 500, 7201)));
    }

    // Uniform law over the shifts.
    {
        const json params{{"eps", eps}};
        const json in{{"generator", "shift"}, {"params", {{"n", 64}, {"balanced", true}}}};
        expect("uniform shift in", accept_lower(run("fixed_shift", params, in, 500, 7300)));
        // For balanced x, the average distance from x to the rotations of
        // any y is exactly 1/2.
        const json far{{"generator", "point_mass"}, {"params", {{"n", 64}, {"balanced", true}}}};
        const auto form = instance_form(far, 7301);
        if (form.atoms()[0].string.popcount() * 2 != form.n()) pass = false;
        expect("uniform shift far", reject_lower(run("fixed_shift", params, far, 500, 7301)));
    }
    return {pass, "10 runs x 500 trials, min Wilson lower " + fmt("%.3f", worst) +
                      (parts.empty() ? "" : ", failing:") + [&] {
                          std::string s;
                          for (const auto& p : parts) s += " [" + p + "]";
                          return s;
                      }()};
}

// 8. Self-correction tester over the Hadamard code, k = 7, m = 4.
Outcome self_correction() {
    const json params{{"m", 4}, {"eps", 0.25}, {"delta", 0.125}};
    const json in{{"generator", "codewords"}, {"params", {{"k", 7}, {"m", 4}}}};
    const json twice{{"generator", "codewords"}, {"params", {{"k", 7}, {"m", 8}}}};
    std::string alternating;
    for (int i = 0; i < 64; ++i) alternating += "01";
    const json noise{{"generator", "mixture"}, {"params", {{"parts", {
        {{"generator", "codewords"}, {"params", {{"k", 7}, {"m", 4}}}, {"weight", 0.75}},
        {{"generator", "perturb"}, {"params", {{"center", alternating}, {"eta", 0.3}}}, {"weight", 0.25}}}}}}};
    const double a = accept_lower(run("self_correction", params, in, 500, 8001));
    const double r2 = reject_lower(run("self_correction", params, twice, 500, 8002));
    const double rn = reject_lower(run("self_correction", params, noise, 500, 8003));
    return {a >= kRateTarget && r2 >= kRateTarget && rn >= kRateTarget,
            "m codewords accept lower " + fmt("%.3f", a) + ", 2m codewords reject lower " +
                fmt("%.3f", r2) + ", noise reject lower " + fmt("%.3f", rn)};
}

// 9. Budget law over every tester run above.
Outcome budget_law() {
    return {g_budget.violations == 0 && g_budget.closed_form_mismatches == 0 && g_budget.trials > 0,
            std::to_string(g_budget.trials) + " trials, " + std::to_string(g_budget.violations) +
                " schedule/bound violations, " + std::to_string(g_budget.closed_form_mismatches) +
                " closed-form mismatches"};
}

// 10. Mean of the Poissonized l2 statistic is lambda^2 ||p - q||^2.
Outcome l2_statistic() {
    const double lambda = 20;
    const int trials = 10000;
    Rng rng(1011);
    double worst_z = 0;
    bool pass = true;
    for (int f = 0; f < 10; ++f) {
        const std::size_t n = 6;
        const auto p = testing::random_distribution(rng, n, 1 + rng.below(6));
        FiniteDistribution q = p;
        if (f % 3 == 1) q = testing::random_distribution(rng, n, 1 + rng.below(6));
        if (f % 3 == 2) {
            std::vector<BitString> pool;
            for (const auto& a : p.atoms()) pool.push_back(a.string);
            pool.push_back(testing::random_string(rng, n));
            q = testing::random_over(rng, pool, pool.size());
        }
        const double expected = lambda * lambda * l2_squared(p, q);
        double sum = 0, sum_sq = 0;
        std::vector<BitString> a, b;
        for (int t = 0; t < trials; ++t) {
            const auto [ka, kb] = poissonized_counts(rng, lambda);
            a.clear();
            b.clear();
            for (std::size_t i = 0; i < ka; ++i) a.push_back(p.sample(rng));
            for (std::size_t i = 0; i < kb; ++i) b.push_back(q.sample(rng));
            const double z = equality_statistic(a, b);
            sum += z;
            sum_sq += z * z;
        }
        const double mean = sum / trials;
        const double se = std::sqrt(std::max(0.0, sum_sq / trials - mean * mean) / trials);
        const double score = se > 0 ? std::abs(mean - expected) / se : std::abs(mean - expected);
        worst_z = std::max(worst_z, score);
        if (std::abs(mean - expected) > 3 * se) pass = false;
    }
    return {pass, "10 pairs x 10000 trials, lambda 20, max |mean - expected| = " +
                      fmt("%.2f", worst_z) + " standard errors"};
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    Outcome (*body)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "EMD/TV coincidence", 10, emd_tv},
        {2, "support tester one-sidedness", 30, one_sided},
        {3, "support tester soundness", 60, support_soundness},
        {4, "projection preservation", 120, projection_preservation},
        {5, "equality of pairs", 120, equality},
        {6, "grain rounding", 30, grain_rounding},
        {7, "ideal-object testers", 300, ideal_objects},
        {8, "self-correction tester", 300, self_correction},
        {9, "budget law", 1e9, budget_law},
        {10, "l2 statistic mean", 60, l2_statistic},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_seconds;
        const bool pass = o.pass && in_time;
        failures += !pass;
        std::printf("%s %2d %-30s %s; %.1f s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, in_time ? "" : " (over time limit)");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
