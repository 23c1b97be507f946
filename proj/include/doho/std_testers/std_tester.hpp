#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "json.hpp"

#include "doho/core/bitstring.hpp"
#include "doho/core/report.hpp"

namespace doho {

/// A standard-model tester: sees whole samples and decides.
///
/// Implementations here are label-invariant, so decide() depends only on
/// which samples are equal to which.
class StdTester {
public:
    virtual ~StdTester() = default;

    virtual std::string_view name() const = 0;
    /// Samples consumed by decide() at object size n and proximity eps.
    virtual std::size_t sample_complexity(std::size_t n, double eps) const = 0;
    virtual bool one_sided() const = 0;
    /// `samples` must hold exactly sample_complexity(n, eps) entries.
    virtual Verdict decide(std::span<const BitString> samples, double eps,
                           nlohmann::json* trace = nullptr) const = 0;
};

/// Accepts iff at most m distinct values appear; s = ceil(c * m / eps).
class StdSupportTester final : public StdTester {
public:
    static constexpr double kDefaultConstant = 8.0;

    explicit StdSupportTester(std::size_t m, double c = kDefaultConstant);

    std::string_view name() const override { return "std_support"; }
    std::size_t sample_complexity(std::size_t n, double eps) const override;
    bool one_sided() const override { return true; }
    Verdict decide(std::span<const BitString> samples, double eps,
                   nlohmann::json* trace = nullptr) const override;

    std::size_t m() const noexcept { return m_; }

private:
    std::size_t m_;
    double c_;
};

/// Two-phase m-grained tester. Phase 1 (s1 = ceil(c1 m L) samples, L =
/// max(1, ln m)) collects the set W; phase 2 (s2 = ceil(c2 eps^-2 m L)
/// samples) estimates p_w for w in W. Rejects when a phase-2 sample falls
/// outside W, or when some p_w >= (1 - 0.1 eps) / (2m) is not within a
/// 1 +- 0.1 eps factor of a positive multiple of 1/m.
class StdGrainedTester final : public StdTester {
public:
    static constexpr double kDefaultPhase1 = 4.0;
    static constexpr double kDefaultPhase2 = 450.0;

    StdGrainedTester(std::size_t m, double c1 = kDefaultPhase1, double c2 = kDefaultPhase2);

    std::string_view name() const override { return "std_grained"; }
    std::size_t sample_complexity(std::size_t n, double eps) const override;
    bool one_sided() const override { return false; }
    Verdict decide(std::span<const BitString> samples, double eps,
                   nlohmann::json* trace = nullptr) const override;

    std::size_t phase1_samples() const;
    std::size_t phase2_samples(double eps) const;
    std::size_t m() const noexcept { return m_; }

    /// True when p lies within a 1 +- 0.1 eps factor of k/m for some k >= 1.
    static bool near_multiple(double p, std::size_t m, double eps);

private:
    std::size_t m_;
    double c1_;
    double c2_;
};

}  // namespace doho
