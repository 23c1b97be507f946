#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "doho/core/oracle.hpp"
#include "doho/core/report.hpp"
#include "doho/testers/constants.hpp"
#include "doho/testers/string_testers.hpp"

namespace doho {

enum class CyclicMode { kSimple, kLevin };

struct CyclicLevel {
    std::size_t samples = 0;  ///< samples compared against the reference
    std::size_t offsets = 0;
};

/// Simple: one level with ceil(C12 / eps) - 1 compared samples (at least 1)
/// and ceil(C14 eps^-1 ln(n / eps)) offsets. Levin: R = ceil(log2(2 / eps))
/// levels; level r compares ceil(C12 R / (2^r eps)) samples using
/// ceil(C14 2^r ln(n / eps)) offsets. Offsets are capped at n.
std::vector<CyclicLevel> cyclic_schedule(std::size_t n, double eps, CyclicMode mode,
                                         const TesterConstants& c);

/// min(n, ceil(C13 sqrt(n ln t))) shifts per pair, t = total samples.
std::size_t cyclic_shift_count(std::size_t n, std::size_t total_samples,
                               const TesterConstants& c);

/// True iff some shifts s_j, s_j' satisfy x[(s_j + o_k) mod n] ==
/// y[(s_j' + o_k) mod n] for every offset o_k. Reads every planned position
/// of both strings.
bool cyclic_pair_aligned(StringAccess& x, StringAccess& y, const std::vector<std::size_t>& shifts,
                         const std::vector<std::size_t>& offsets);

/// Distributions over cyclic shifts of one string. Compares the first sample
/// with every other one, drawing fresh shifts and offsets per pair; rejects
/// iff some pair has no alignment. Every pair is checked (no early exit).
/// trace["pairs"] lists the shifts and offsets of each pair, which fix the
/// queries: |union of planned positions| on the reference plus |planned
/// positions| on each compared sample.
TesterReport cyclic_shift_tester(SampleOracle& oracle, double eps,
                                 CyclicMode mode = CyclicMode::kSimple,
                                 const TesterConstants& constants = {},
                                 std::uint64_t seed = 0);

/// Query count implied by a cyclic_shift_tester trace.
std::size_t cyclic_planned_queries(std::size_t n, const nlohmann::json& trace);

}  // namespace doho
