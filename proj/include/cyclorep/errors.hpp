#pragma once

#include <stdexcept>
#include <string>

namespace cyclorep {

enum class ErrorKind {
    DivisionByZero,
    ModulusMismatch,
    NotCoprime,
    ShapeMismatch,
    Singular,
    NotAntiHermitian,
    AmbiguousSign,
    InvalidParameter,
    ExponentDivisible,
    NotPrimitive,
    DisconnectedCover,
    IndexOutOfRange,
    NotDegenerate,
    RadicalNotFixed,
    DegenerateBlock,
    OutOfRange,
    PreconditionFailed,
    BadM,
    ConstraintViolation,
    NotUnipotentElement,
    NotParabolicElement,
    NoNonzeroPairing,
    ParseError,
};

inline const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::NotAntiHermitian: return "NotAntiHermitian";
        case ErrorKind::AmbiguousSign: return "AmbiguousSign";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::ExponentDivisible: return "ExponentDivisible";
        case ErrorKind::NotPrimitive: return "NotPrimitive";
        case ErrorKind::DisconnectedCover: return "DisconnectedCover";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotDegenerate: return "NotDegenerate";
        case ErrorKind::RadicalNotFixed: return "RadicalNotFixed";
        case ErrorKind::DegenerateBlock: return "DegenerateBlock";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::BadM: return "BadM";
        case ErrorKind::ConstraintViolation: return "ConstraintViolation";
        case ErrorKind::NotUnipotentElement: return "NotUnipotentElement";
        case ErrorKind::NotParabolicElement: return "NotParabolicElement";
        case ErrorKind::NoNonzeroPairing: return "NoNonzeroPairing";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// All library failures. `kind()` gives the machine-readable name.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace cyclorep
