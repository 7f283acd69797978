#pragma once

#include <stdexcept>
#include <string>

namespace kpt {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable tag used by the CLI error object.
class Error : public std::runtime_error {
public:
    Error(const char* kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    const char* kind() const noexcept { return kind_; }

private:
    const char* kind_;
};

/// A documented precondition (k >= 1, n >= 2, ...) does not hold.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what)
        : Error("PreconditionViolated", what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what)
        : Error("DimensionMismatch", what) {}
};

/// r = 0 where the spectral theory needs r != 0.
class ZeroR : public Error {
public:
    explicit ZeroR(const std::string& what = "r must be nonzero")
        : Error("ZeroR", what) {}
};

/// The residual target is not reachable at the requested precision.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what)
        : Error("PrecisionExhausted", what) {}
};

/// An iterative method hit its iteration cap. Carries the last estimate.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, double last_estimate)
        : Error("NoConvergence", what), last_estimate_(last_estimate) {}

    double last_estimate() const noexcept { return last_estimate_; }

private:
    double last_estimate_;
};

/// Some rho_m lies on a root of psi; the generic closed form does not apply.
class DegenerateCase : public Error {
public:
    explicit DegenerateCase(const std::string& what)
        : Error("DegenerateCase", what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace kpt
