#pragma once

#include <stdexcept>
#include <string>

namespace gaussmix {

// Domain errors (bad arguments, violated preconditions) are reported as
// std::domain_error. The types below cover the remaining failure classes.

/// A numerical procedure failed to meet its accuracy contract
/// (ill-conditioned fit, residual above threshold).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unrecognized experiment configuration.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or malformed input file.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gaussmix
