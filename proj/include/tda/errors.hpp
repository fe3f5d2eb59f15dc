#pragma once

#include <stdexcept>
#include <string>

namespace tda {

/// Malformed or inconsistent input data (bad CSV row, duplicate timestamp,
/// non-finite value, empty slice). CLI maps these to exit code 1.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration (bad embedding parameters, p < 1, dimension out of
/// range). CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace tda
