#pragma once

#include <stdexcept>
#include <string>

namespace fronts {

/// Bad configuration or malformed user input.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical procedure failed (singular cell problem, diverging
/// iteration, zero pivot, front leaving the domain, ...).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure, reported with the offending path.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fronts
