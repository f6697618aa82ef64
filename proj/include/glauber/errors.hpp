#pragma once

#include <stdexcept>
#include <string>

namespace glauber {

/// Malformed model or function specification (bad file, bad field, bad value).
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested enumeration exceeds the configured state-space cap.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to converge or was asked to operate outside
/// its stable regime (quadrature blow-up, ill-conditioned conjugation, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace glauber
