#pragma once

#include <stdexcept>
#include <string>

namespace hcov {

/// Bad input: invalid Cartan type, non-oasitic cover where one is required, etc.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested enumeration is larger than the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_(required) {}
    unsigned long long required_cap() const noexcept { return required_; }

private:
    unsigned long long required_;
};

/// A series did not meet its convergence certificate, or provably diverges.
class NotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity failed (non-integral average, corrupted element, ...).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace hcov
