#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace doho {

/// Every O(.) constant used by the testers. Config names are C1..C17; the
/// field names say where each one enters.
struct TesterConstants {
    double grained_phase1 = 4.0;       // C1: phase-1 samples, c m ln m
    double grained_phase2 = 450.0;     // C2: phase-2 samples, c eps^-2 m ln m
    double equality_rate = 10.0;       // C3: Poisson mean factor
    double lift_positions = 4.0;       // C4: |J| = c eps^-1 ln(s/eps)
    double support_samples = 8.0;      // C5: s = c m / eps
    double support_positions = 8.0;    // C6: |J| = c eps^-1 ln(m+1)
    double equality_positions = 4.0;   // C7: |J| = c eps^-1 ln(m+1)
    double perturb_indices = 2.0;      // C8: |I| = c eps^-2 ln(1/eps+1)
    double perturb_estimates = 6.0;    // C9: c eps^-2 ln|I| estimate samples
    double perturb_checks = 4.0;       // C10: c eps^-1 ln(1/eps+1) checked samples
    double majority_votes = 4.0;       // C11: c ln(Q+1) samples per emulated query
    double ideal_samples = 6.0;        // C12: t = c / eps
    double cyclic_shifts = 2.0;        // C13: c sqrt(n ln t) shifts per pair
    double cyclic_offsets = 3.0;       // C14: c eps^-1 ln(n/eps) offsets per pair
    double dpi_samples = 4.0;          // C15: c / eps samples
    double amplification = 2.0;        // C16: c ln(100 s) repetitions
    double correction_positions = 2.0; // C17: |I| = c delta^-1 ln s

    static const std::vector<std::string>& names();
    /// Value by config name ("C1".."C17"); throws std::invalid_argument.
    double get(std::string_view name) const;
    void set(std::string_view name, double value);

    nlohmann::json to_json() const;
    /// Starts from the defaults and overrides the names present in `j`.
    static TesterConstants from_json(const nlohmann::json& j);

    friend bool operator==(const TesterConstants&, const TesterConstants&) = default;
};

}  // namespace doho
