#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "doho/core/bitstring.hpp"
#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/core/rng.hpp"

namespace doho {

/// Bit-query access to a single string.
class StringAccess {
public:
    virtual ~StringAccess() = default;
    virtual std::size_t n() const = 0;
    virtual bool bit(std::size_t i) = 0;
};

/// One drawn sample, read through the oracle. Answers are cached, so each
/// position is queried at most once; distinct() is the number of positions
/// read so far, which is exactly what the oracle bills for this handle.
class SampleAccess final : public StringAccess {
public:
    SampleAccess(SampleOracle& oracle, SampleHandle handle);

    std::size_t n() const override { return cache_.size(); }
    bool bit(std::size_t i) override;
    std::size_t distinct() const noexcept { return distinct_; }
    const SampleHandle& handle() const noexcept { return handle_; }

private:
    SampleOracle* oracle_;
    SampleHandle handle_;
    std::vector<std::int8_t> cache_;
    std::size_t distinct_ = 0;
};

/// A string held in memory. Counts reads, repeated or not.
class BitStringAccess final : public StringAccess {
public:
    explicit BitStringAccess(BitString x) : x_(std::move(x)) {}

    std::size_t n() const override { return x_.size(); }
    bool bit(std::size_t i) override {
        ++reads_;
        return x_.at(i);
    }
    std::size_t reads() const noexcept { return reads_; }

private:
    BitString x_;
    std::size_t reads_ = 0;
};

/// Property tester for single strings.
class StringTester {
public:
    virtual ~StringTester() = default;
    virtual std::string_view name() const = 0;
    virtual bool one_sided() const = 0;
    /// Upper bound on the queries of one test() call.
    virtual std::size_t query_bound(std::size_t n, double eps) const = 0;
    /// Accepts members of the property; rejects strings eps-far from it with
    /// probability at least 2/3.
    virtual Verdict test(StringAccess& x, double eps, Rng& rng) const = 0;
};

/// Local corrector: recovers bit i of the codeword nearest to x when x is
/// within radius() of the code, with probability at least 2/3 per call.
class SelfCorrector {
public:
    virtual ~SelfCorrector() = default;
    virtual std::string_view name() const = 0;
    virtual double radius() const = 0;
    virtual std::size_t query_bound() const = 0;
    /// nullopt stands for the "cannot correct" answer.
    virtual std::optional<bool> correct(StringAccess& x, std::size_t i, Rng& rng) const = 0;
};

/// Linearity (Hadamard codeword) test: n = 2^k, x read as the truth table of
/// f over GF(2)^k, index a <-> vector a. Repeats the check
/// f(a) + f(b) = f(a xor b) ceil(c / eps) times.
class LinearityTester final : public StringTester {
public:
    static constexpr double kDefaultRepetitions = 2.0;

    explicit LinearityTester(double c = kDefaultRepetitions) : c_(c) {}

    std::string_view name() const override { return "linearity"; }
    bool one_sided() const override { return true; }
    std::size_t query_bound(std::size_t n, double eps) const override;
    Verdict test(StringAccess& x, double eps, Rng& rng) const override;

    std::size_t rounds(double eps) const;

private:
    double c_;
};

/// Property {0^n, 1^n}: compares ceil(c / eps) random pairs of positions.
class AllEqualTester final : public StringTester {
public:
    static constexpr double kDefaultRepetitions = 2.0;

    explicit AllEqualTester(double c = kDefaultRepetitions) : c_(c) {}

    std::string_view name() const override { return "all_equal"; }
    bool one_sided() const override { return true; }
    std::size_t query_bound(std::size_t n, double eps) const override;
    Verdict test(StringAccess& x, double eps, Rng& rng) const override;

    std::size_t rounds(double eps) const;

private:
    double c_;
};

/// x(i xor r) xor x(r) for a random r. Never answers nullopt itself; the
/// combined machines in amplify.hpp add the refusal.
class HadamardCorrector final : public SelfCorrector {
public:
    explicit HadamardCorrector(double radius = 0.125) : radius_(radius) {}

    std::string_view name() const override { return "hadamard"; }
    double radius() const override { return radius_; }
    std::size_t query_bound() const override { return 2; }
    std::optional<bool> correct(StringAccess& x, std::size_t i, Rng& rng) const override;

private:
    double radius_;
};

/// Spot-check tester for the code: the property test at proximity
/// corrector.radius(), then ceil(c / eps) random positions whose
/// majority-corrected value must equal the read bit. One-sided when the
/// property tester is.
class SpotCheckTester final : public StringTester {
public:
    static constexpr double kDefaultChecks = 2.0;

    SpotCheckTester(const StringTester& pi_tester, const SelfCorrector& corrector,
                    std::size_t votes, double c = kDefaultChecks);

    std::string_view name() const override { return "spot_check"; }
    bool one_sided() const override { return pi_tester_->one_sided(); }
    std::size_t query_bound(std::size_t n, double eps) const override;
    Verdict test(StringAccess& x, double eps, Rng& rng) const override;

    std::size_t checks(double eps) const;

private:
    const StringTester* pi_tester_;
    const SelfCorrector* corrector_;
    std::size_t votes_;
    double c_;
};

}  // namespace doho
