#pragma once

#include <stdexcept>
#include <string>

namespace stg {

// Thrown when an explicit construction would exceed the configured vertex cap.
class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an exact inverse is requested for a singular matrix.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace stg
