#pragma once

#include <stdexcept>
#include <string>

namespace mlspectral {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A precondition on parameters was violated (alpha out of range, bad grid, ...).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// No evaluation regime reached the requested tolerance within its iteration cap.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

// Quadrature grid does not resolve the requested band limit.
class ResolutionTooLow : public Error {
public:
    explicit ResolutionTooLow(const std::string& msg) : Error(msg) {}
};

// The enumerated part of the dual does not cover the requested spectral window.
class TruncationInsufficient : public Error {
public:
    explicit TruncationInsufficient(const std::string& msg) : Error(msg) {}
};

// A regression/fit window has too few samples.
class WindowTooShort : public Error {
public:
    explicit WindowTooShort(const std::string& msg) : Error(msg) {}
};

// A case selector outside its documented range.
class InvalidCase : public Error {
public:
    explicit InvalidCase(const std::string& msg) : Error(msg) {}
};

}  // namespace mlspectral
