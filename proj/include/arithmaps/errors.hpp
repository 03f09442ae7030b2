#pragma once

#include <stdexcept>
#include <string>

namespace arithmaps {

// Base for all mathematical error conditions raised by the library.
// Configuration / IO problems use plain std::runtime_error instead.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
    explicit DivisionByZero(const std::string& w) : MathError(w) {}
};

struct BothZero : MathError {
    BothZero() : MathError("gcd of two zero polynomials") {}
};

struct NonSquare : MathError {
    NonSquare() : MathError("determinant of a non-square matrix") {}
};

struct BadCoefficients : MathError {
    explicit BadCoefficients(const std::string& w) : MathError(w) {}
};

struct NotPAdicInteger : MathError {
    NotPAdicInteger() : MathError("negative valuation: not a p-adic integer") {}
};

// Cancellation consumed every known digit; the valuation (hence any
// reduction) is unknowable at the current working precision.
struct PrecisionExhausted : MathError {
    PrecisionExhausted() : MathError("precision exhausted by cancellation") {}
};

struct SingularInput : MathError {
    explicit SingularInput(const std::string& w) : MathError(w) {}
};

struct NoZeroAchievable : MathError {
    NoZeroAchievable() : MathError("no schedule index makes the coefficient vanish") {}
};

struct NotAutonomous : MathError {
    NotAutonomous() : MathError("cycle decomposition requires delta = 0") {}
};

struct DomainViolation : MathError {
    explicit DomainViolation(const std::string& w) : MathError(w) {}
};

struct ZeroTau : MathError {
    ZeroTau() : MathError("tau function vanishes in a denominator") {}
};

struct ZeroDeterminant : MathError {
    ZeroDeterminant() : MathError("solution determinant vanishes") {}
};

struct ZeroSigma : MathError {
    ZeroSigma() : MathError("soliton sigma vanishes in a denominator") {}
};

struct SingularEntry : MathError {
    explicit SingularEntry(const std::string& w) : MathError(w) {}
};

struct SymbolicSingular : MathError {
    SymbolicSingular() : MathError("1 + delta*x*y is identically zero") {}
};

struct DegenerateSchedule : MathError {
    DegenerateSchedule()
        : MathError("exceptional stratum has no consistent image at a step with a vanishing coefficient") {}
};

}  // namespace arithmaps
