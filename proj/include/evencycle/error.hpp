#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evencycle {

enum class ErrorCode {
    NotPrime,
    ReducibleModulus,
    UnsupportedOrder,
    DivisionByZero,
    WrongFieldOrder,
    InvalidGraph,
    ParseError,
    ExplosionCeiling,
    NotATheta,
    TooFar,
    Precondition,
    LemmaViolation,
    NotApplicable,
    BudgetExceeded,
    ConstructionFailure,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::WrongFieldOrder: return "WrongFieldOrder";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ExplosionCeiling: return "ExplosionCeiling";
    case ErrorCode::NotATheta: return "NotATheta";
    case ErrorCode::TooFar: return "TooFar";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ConstructionFailure: return "ConstructionFailure";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace evencycle
