#include "doho/harness/params.hpp"

#include <cmath>
#include <string>

namespace doho {

Params::Params(nlohmann::json j) : j_(std::move(j)) {
    if (j_.is_null()) j_ = nlohmann::json::object();
    if (!j_.is_object()) throw ParameterError("parameters must be a JSON object");
}

bool Params::has(std::string_view key) const { return j_.contains(key); }

const nlohmann::json& Params::at(std::string_view key) const {
    auto it = j_.find(key);
    if (it == j_.end()) throw ParameterError("missing parameter '" + std::string(key) + "'");
    return *it;
}

double Params::number(std::string_view key) const {
    const auto& v = at(key);
    if (v.is_number()) return v.get<double>();
    // command-line values such as "10" arrive as strings (see parse_assignment)
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        std::size_t used = 0;
        try {
            const double d = std::stod(s, &used);
            if (used == s.size()) return d;
        } catch (const std::exception&) {
        }
    }
    throw ParameterError("parameter '" + std::string(key) + "' must be a number");
}

double Params::number(std::string_view key, double fallback) const {
    return has(key) ? number(key) : fallback;
}

std::size_t Params::count(std::string_view key) const {
    const double v = number(key);
    if (v < 0 || v != std::floor(v)) {
        throw ParameterError("parameter '" + std::string(key) + "' must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
}

std::size_t Params::count(std::string_view key, std::size_t fallback) const {
    return has(key) ? count(key) : fallback;
}

std::string Params::text(std::string_view key) const {
    const auto& v = at(key);
    if (!v.is_string()) throw ParameterError("parameter '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

std::string Params::text(std::string_view key, std::string_view fallback) const {
    return has(key) ? text(key) : std::string(fallback);
}

void parse_assignment(std::string_view text, nlohmann::json& into) {
    const auto eq = text.find('=');
    if (eq == std::string_view::npos || eq == 0) {
        throw ParameterError("expected key=value, got '" + std::string(text) + "'");
    }
    const std::string key(text.substr(0, eq));
    const std::string value(text.substr(eq + 1));
    const bool binary = value.size() > 1 && value.find_first_not_of("01") == std::string::npos;
    if (binary) {
        into[key] = value;
        return;
    }
    auto parsed = nlohmann::json::parse(value, nullptr, false);
    into[key] = parsed.is_discarded() ? nlohmann::json(value) : parsed;
}

}  // namespace doho
