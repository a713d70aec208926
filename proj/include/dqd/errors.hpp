// errors.hpp — exception types mapped to CLI exit codes
#pragma once

#include <stdexcept>
#include <string>

namespace dqd {

// Bad or inconsistent configuration / input parameters (exit code 2).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Quadrature grid cannot resolve the requested dynamics (exit code 3).
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures while writing outputs (exit code 4).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dqd
