#pragma once

#include <stdexcept>
#include <string>

namespace charp {

// Every failure mode the library reports deliberately.  CLI exit codes are
// derived from the kind (see tools/).
enum class ErrorKind {
    RingMismatch,
    LengthMismatch,
    DegreeExplosion,
    UnitIdeal,
    NotStabilized,
    ZeroDivisorGamma,
    HeightMismatch,
    NoTestElementFound,
    GenericityFailure,
    NonPrincipalLink,
    ContainmentViolation,
    ChainNotAscending,
    TestElementUncertified,
    DegreeBoundTooSmall,
    ParseError,
    NonPrimeChar,
    InvalidArgument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DegreeExplosion: return "DegreeExplosion";
        case ErrorKind::UnitIdeal: return "UnitIdeal";
        case ErrorKind::NotStabilized: return "NotStabilized";
        case ErrorKind::ZeroDivisorGamma: return "ZeroDivisorGamma";
        case ErrorKind::HeightMismatch: return "HeightMismatch";
        case ErrorKind::NoTestElementFound: return "NoTestElementFound";
        case ErrorKind::GenericityFailure: return "GenericityFailure";
        case ErrorKind::NonPrincipalLink: return "NonPrincipalLink";
        case ErrorKind::ContainmentViolation: return "ContainmentViolation";
        case ErrorKind::ChainNotAscending: return "ChainNotAscending";
        case ErrorKind::TestElementUncertified: return "TestElementUncertified";
        case ErrorKind::DegreeBoundTooSmall: return "DegreeBoundTooSmall";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonPrimeChar: return "NonPrimeChar";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

} // namespace charp
