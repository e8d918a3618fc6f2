#pragma once

#include <stdexcept>
#include <string>

namespace disc {

/// Failure categories. Input-side categories map to CLI exit code 2,
/// numerical ones to exit code 3.
enum class ErrorKind {
    domain,           // point on or outside the unit sphere / circle
    shape,            // malformed arrays, dimension mismatch, non-Hermitian input
    parameter,        // out-of-range scalar parameter (p < 1, delta <= 0, ...)
    degenerate,       // coincident nodes, singular Gram matrix
    precondition,     // documented precondition of an operation not met
    infeasible,       // interpolation data fails the Pick condition
    conditioning,     // recursion left the disc although the PSD test passed
    integration,      // non-finite integrand value
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    bool is_input_error() const noexcept {
        switch (kind_) {
        case ErrorKind::domain:
        case ErrorKind::shape:
        case ErrorKind::parameter:
        case ErrorKind::degenerate:
        case ErrorKind::precondition:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

/// Raised by the scalar solver on data failing the Pick condition; carries the
/// smallest Pick eigenvalue.
class InfeasibleError : public Error {
public:
    InfeasibleError(const std::string& what, double min_eigenvalue)
        : Error(ErrorKind::infeasible, what), min_eigenvalue_(min_eigenvalue) {}

    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::shape: return "shape";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::conditioning: return "conditioning";
    case ErrorKind::integration: return "integration";
    }
    return "unknown";
}

} // namespace disc
