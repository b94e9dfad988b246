#pragma once

#include <stdexcept>
#include <string>

namespace lime {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File opened but does not decode as a supported image format.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Caller violated a precondition (dimension mismatch, bad parameter).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// An external denoiser command failed or produced unreadable output.
class ExternalToolError : public Error {
public:
    using Error::Error;
};

/// Iterative solver hit its iteration cap before reaching tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double residual, int iterations)
        : Error(what), residual_(residual), iterations_(iterations) {}

    /// Relative residual reached when the cap was hit.
    double residual() const { return residual_; }
    int iterations() const { return iterations_; }

private:
    double residual_;
    int iterations_;
};

} // namespace lime
