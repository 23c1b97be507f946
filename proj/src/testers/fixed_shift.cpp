#include "doho/testers/fixed_shift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doho/testers/equality_pair.hpp"

namespace doho {

void validate_shift_law(const std::vector<double>& law, std::size_t n) {
    if (n == 0 || law.size() != n) {
        throw std::invalid_argument("shift law must have one weight per shift 0..n-1");
    }
    double total = 0;
    for (double w : law) {
        if (!(w >= 0) || !std::isfinite(w)) {
            throw std::invalid_argument("shift law weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("shift law must sum to 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (law[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(law[(j + i) % n] - law[j]) > 1e-12) {
                throw std::invalid_argument("shift law is not invariant under shift by " +
                                            std::to_string(i));
            }
        }
    }
}

std::vector<double> uniform_shift_law(std::size_t n) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

ShiftedCopyOracle::ShiftedCopyOracle(SampleOracle& base, std::vector<double> law, Rng& rng)
    : base_(&base), rng_(&rng) {
    if (base.arity() != 1) throw std::invalid_argument("shifted copy: base must have arity 1");
    validate_shift_law(law, base.n());
    cumulative_.resize(law.size());
    double acc = 0;
    for (std::size_t i = 0; i < law.size(); ++i) cumulative_[i] = acc += law[i];
    x1_ = base.draw(0, 1).front();
}

std::vector<SampleHandle> ShiftedCopyOracle::draw(std::size_t which, std::size_t count) {
    if (which == 0) return base_->draw(0, count);
    if (which != 1 || count == 0) throw std::invalid_argument("shifted copy: bad draw");
    std::vector<SampleHandle> out;
    out.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = rng_->uniform01() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        // rounding can land on a zero-weight tail; back up to the last real shift
        while (it != cumulative_.begin() && *it == *(it - 1)) --it;
        shifts_.push_back(static_cast<std::size_t>(it - cumulative_.begin()));
        out.push_back({x1_.oracle_id, 1, shifts_.size() - 1});
    }
    return out;
}

bool ShiftedCopyOracle::query(const SampleHandle& h, std::size_t position) {
    if (h.which != 1) return base_->query(h, position);
    if (h.oracle_id != x1_.oracle_id || h.index >= shifts_.size()) {
        throw std::invalid_argument("shifted copy: unknown handle");
    }
    if (position >= n()) throw std::out_of_range("shifted copy: position out of range");
    return base_->query(x1_, (position + shifts_[h.index]) % n());
}

TesterReport fixed_shift_dist_tester(SampleOracle& oracle, double eps,
                                     std::vector<double> shift_law,
                                     const TesterConstants& constants, std::uint64_t seed) {
    const std::size_t n = oracle.n();
    if (shift_law.empty()) shift_law = uniform_shift_law(n);
    validate_shift_law(shift_law, n);
    Rng rng(seed);
    Rng law_rng = rng.split(1);
    ShiftedCopyOracle view(oracle, std::move(shift_law), law_rng);

    nlohmann::json trace = nlohmann::json::object();
    const auto run =
        equality_pair_run(view, n, eps, SupportBound::kOneSide, constants, rng, trace);

    std::vector<char> touched(n, 0);
    std::size_t on_reference = 0;
    for (const auto& h : run.handles_y) {
        for (std::size_t j : run.positions) {
            auto& t = touched[(j + view.shifts()[h.index]) % n];
            if (!t) {
                t = 1;
                ++on_reference;
            }
        }
    }
    trace["shifts"] = view.shifts();
    trace["reference_queries"] = on_reference;
    trace["virtual_samples"] = run.samples_y;
    const std::size_t scheduled = run.samples_x * run.positions.size() + on_reference;
    return finish_report(oracle, run.verdict, scheduled, std::move(trace));
}

}  // namespace doho
