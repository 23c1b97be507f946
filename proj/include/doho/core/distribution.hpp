#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/rng.hpp"

namespace doho {

/// Anything that can produce i.i.d. samples over {0,1}^n.
///
/// FiniteDistribution is the explicit ground-truth form; generators also
/// provide implicit sources (product noise, lazy complements) whose support is
/// too large to enumerate.
class StringSource {
public:
    virtual ~StringSource() = default;

    virtual std::size_t n() const = 0;
    /// Writes one sample into `out` (exactly BitString::words_for(n()) words,
    /// unused high bits zero).
    virtual void sample_into(Rng& rng, std::span<std::uint64_t> out) const = 0;

    BitString sample(Rng& rng) const;
};

struct Atom {
    BitString string;
    double weight;
};

/// Explicit support-plus-weights distribution over n-bit strings.
///
/// Invariants (checked at construction): every string has length n, strings
/// are pairwise distinct, weights lie in (0,1] and sum to 1 within 1e-12.
class FiniteDistribution final : public StringSource {
public:
    static constexpr double kWeightTolerance = 1e-12;

    FiniteDistribution(std::size_t n, std::vector<Atom> atoms);

    /// Merges repeated strings, drops non-positive weights, and rescales the
    /// total to exactly 1 when it is within `tolerance` of 1.
    static FiniteDistribution from_weighted(std::size_t n, std::vector<Atom> atoms,
                                            double tolerance = kWeightTolerance);
    static FiniteDistribution point_mass(const BitString& s);
    static FiniteDistribution uniform(std::size_t n, std::vector<BitString> support);

    std::size_t n() const override { return n_; }
    std::size_t support_size() const noexcept { return atoms_.size(); }
    std::span<const Atom> atoms() const noexcept { return atoms_; }
    /// Probability of `s` (0 when outside the support).
    double weight_of(const BitString& s) const;
    /// Same distribution with atoms sorted by string.
    FiniteDistribution canonical() const;

    std::size_t sample_index(Rng& rng) const;
    void sample_into(Rng& rng, std::span<std::uint64_t> out) const override;

    /// Push-forward through `f`, merging atoms that land on the same string.
    template <typename F>
    FiniteDistribution map(std::size_t out_n, F&& f) const {
        std::vector<Atom> out;
        out.reserve(atoms_.size());
        for (const auto& a : atoms_) out.push_back({f(a.string), a.weight});
        return from_weighted(out_n, std::move(out));
    }

    /// Restriction X_J: each atom restricted to `positions`.
    FiniteDistribution restricted(std::span<const std::size_t> positions) const;

    friend bool operator==(const FiniteDistribution& a, const FiniteDistribution& b);

private:
    std::size_t n_;
    std::vector<Atom> atoms_;
    std::vector<double> cumulative_;
};

using SourcePtr = std::shared_ptr<const StringSource>;

}  // namespace doho
