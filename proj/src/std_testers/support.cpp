#include <cmath>
#include <stdexcept>

#include "doho/std_testers/collision.hpp"
#include "doho/std_testers/std_tester.hpp"

namespace doho {

StdSupportTester::StdSupportTester(std::size_t m, double c) : m_(m), c_(c) {
    if (m == 0) throw std::invalid_argument("std_support: m must be positive");
    if (!(c > 0)) throw std::invalid_argument("std_support: constant must be positive");
}

std::size_t StdSupportTester::sample_complexity(std::size_t, double eps) const {
    if (!(eps > 0)) throw std::invalid_argument("std_support: eps must be positive");
    return static_cast<std::size_t>(std::ceil(c_ * static_cast<double>(m_) / eps));
}

Verdict StdSupportTester::decide(std::span<const BitString> samples, double,
                                 nlohmann::json* trace) const {
    const std::size_t distinct = collision_pattern(samples).distinct();
    if (trace) {
        (*trace)["distinct"] = distinct;
        (*trace)["m"] = m_;
    }
    return distinct <= m_ ? Verdict::kAccept : Verdict::kReject;
}

}  // namespace doho
