#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/distribution.hpp"
#include "doho/core/rng.hpp"

namespace doho {

/// Independent flips of x*, bit i with probability rates[i], conditioned on
/// at most floor(delta n) flips (rejection sampling). Conditioning on that
/// decreasing event can only lower each bit's flip probability.
class PerturbSource final : public StringSource {
public:
    PerturbSource(BitString center, double rate, double delta);
    PerturbSource(BitString center, std::vector<double> rates, double delta);

    std::size_t n() const override { return center_.size(); }
    void sample_into(Rng& rng, std::span<std::uint64_t> out) const override;

    const BitString& center() const noexcept { return center_; }
    std::size_t radius() const noexcept { return radius_; }
    /// Pr[more than radius() flips] before conditioning.
    double truncated_mass() const noexcept { return truncated_; }

private:
    BitString center_;
    std::vector<double> rates_;
    std::size_t radius_;
    double truncated_;
};

/// Pr[K > floor(delta n)] for K = the number of flips under `rates`.
double truncation_mass(const std::vector<double>& rates, double delta);

/// Picks component i with probability weight_i, then samples it.
class MixtureSource final : public StringSource {
public:
    explicit MixtureSource(std::vector<std::pair<SourcePtr, double>> parts);

    std::size_t n() const override { return n_; }
    void sample_into(Rng& rng, std::span<std::uint64_t> out) const override;

private:
    std::size_t n_;
    std::vector<SourcePtr> parts_;
    std::vector<double> cumulative_;
};

/// With probability 1/2 uniform on S, otherwise uniform on the complement of
/// S (by rejection, so S must be a small part of {0,1}^n).
class ComplementMixtureSource final : public StringSource {
public:
    ComplementMixtureSource(std::size_t n, std::vector<BitString> subset);

    std::size_t n() const override { return n_; }
    void sample_into(Rng& rng, std::span<std::uint64_t> out) const override;

private:
    std::size_t n_;
    std::vector<BitString> subset_;
};

/// Uniform string of length n into `out`.
void uniform_string_into(Rng& rng, std::size_t n, std::span<std::uint64_t> out);

}  // namespace doho
