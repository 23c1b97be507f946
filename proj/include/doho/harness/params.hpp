#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace doho {

/// Bad or missing configuration value. Maps to the usage exit code.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Typed read access to a JSON object of parameters.
class Params {
public:
    Params() : j_(nlohmann::json::object()) {}
    explicit Params(nlohmann::json j);

    bool has(std::string_view key) const;
    double number(std::string_view key) const;
    double number(std::string_view key, double fallback) const;
    std::size_t count(std::string_view key) const;
    std::size_t count(std::string_view key, std::size_t fallback) const;
    std::string text(std::string_view key) const;
    std::string text(std::string_view key, std::string_view fallback) const;
    const nlohmann::json& at(std::string_view key) const;
    const nlohmann::json& json() const noexcept { return j_; }

private:
    nlohmann::json j_;
};

/// "key=value" -> {key: value}. Values made of two or more 0/1 characters
/// stay strings (bit strings); other values are parsed as JSON when possible
/// and kept as strings otherwise. number() accepts numeric strings.
void parse_assignment(std::string_view text, nlohmann::json& into);

}  // namespace doho
