#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

/// Invalid construction parameters (non-convex density, out-of-range exponent, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative solver or quadrature hit its cap before reaching tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// No multiplicativity constant exists within the search interval.
class NoCertificateError : public std::runtime_error {
public:
    explicit NoCertificateError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace orlicz
