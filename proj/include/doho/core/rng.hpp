#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace doho {

/// SplitMix64 finalizer. Used to derive independent child seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Child seed for stream `stream` of a parent seed. Deterministic and
/// platform-independent.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// The single randomness source of the toolkit.
///
/// Engine: std::mt19937_64 seeded with one 64-bit word (its output sequence is
/// fixed by the C++ standard). Every distribution below is implemented here
/// rather than taken from <random>, whose distributions are
/// implementation-defined; this keeps experiment reports byte-identical across
/// standard libraries. Splitting derives a fresh engine from
/// derive_seed(seed, stream), independent of how much the parent was used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }
    Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();
    bool bernoulli(double p);
    /// Poisson variate. Knuth multiplication below mean 10, Hormann's PTRS
    /// transformed rejection above.
    std::uint64_t poisson(double mean);
    /// Uniform k-subset of {0..n-1} by Floyd's algorithm, sorted ascending.
    std::vector<std::size_t> subset(std::size_t n, std::size_t k);
    /// Uniform random permutation of {0..n-1} (Fisher-Yates).
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace doho
