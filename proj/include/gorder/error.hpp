#pragma once

#include <stdexcept>
#include <string>

namespace gorder {

/// Malformed input data (bad edge list, unparseable graph6, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside the defined domain of an operation.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a configured size limit.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gorder
