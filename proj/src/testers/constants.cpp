#include "doho/testers/constants.hpp"

#include <stdexcept>

namespace doho {

namespace {

double TesterConstants::*field(std::string_view name) {
    static const std::pair<std::string_view, double TesterConstants::*> table[] = {
        {"C1", &TesterConstants::grained_phase1},
        {"C2", &TesterConstants::grained_phase2},
        {"C3", &TesterConstants::equality_rate},
        {"C4", &TesterConstants::lift_positions},
        {"C5", &TesterConstants::support_samples},
        {"C6", &TesterConstants::support_positions},
        {"C7", &TesterConstants::equality_positions},
        {"C8", &TesterConstants::perturb_indices},
        {"C9", &TesterConstants::perturb_estimates},
        {"C10", &TesterConstants::perturb_checks},
        {"C11", &TesterConstants::majority_votes},
        {"C12", &TesterConstants::ideal_samples},
        {"C13", &TesterConstants::cyclic_shifts},
        {"C14", &TesterConstants::cyclic_offsets},
        {"C15", &TesterConstants::dpi_samples},
        {"C16", &TesterConstants::amplification},
        {"C17", &TesterConstants::correction_positions},
    };
    for (const auto& [key, ptr] : table) {
        if (key == name) return ptr;
    }
    throw std::invalid_argument("unknown constant '" + std::string(name) + "'");
}

}  // namespace

const std::vector<std::string>& TesterConstants::names() {
    static const std::vector<std::string> all = {"C1",  "C2",  "C3",  "C4",  "C5",  "C6",
                                                 "C7",  "C8",  "C9",  "C10", "C11", "C12",
                                                 "C13", "C14", "C15", "C16", "C17"};
    return all;
}

double TesterConstants::get(std::string_view name) const { return this->*field(name); }

void TesterConstants::set(std::string_view name, double value) {
    if (!(value > 0)) {
        throw std::invalid_argument("constant " + std::string(name) + " must be positive");
    }
    this->*field(name) = value;
}

nlohmann::json TesterConstants::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& name : names()) j[name] = get(name);
    return j;
}

TesterConstants TesterConstants::from_json(const nlohmann::json& j) {
    TesterConstants c;
    if (!j.is_object()) throw std::invalid_argument("constants must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!value.is_number()) {
            throw std::invalid_argument("constant " + key + " must be a number");
        }
        c.set(key, value.get<double>());
    }
    return c;
}

}  // namespace doho
