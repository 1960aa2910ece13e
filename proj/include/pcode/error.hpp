#pragma once

#include <stdexcept>
#include <string>

namespace pcode {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes; tests match on the code rather than the message.
enum class ErrorCode {
    EnumerationCapExceeded,
    NotASubgroup,
    ElementNotInGroup,
    DomainNotInvariant,
    NotPrime,
    FieldTooLarge,
    DivisionByZero,
    ParameterOutOfRange,
    InvalidConnectionSet,
    TooManyDoubleCosetClasses,
    PreconditionViolated,
    HypothesisNotMet,
    InvalidInput,
    ConsistencyViolation,
    ParseError,
    BudgetExceeded,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
        case ErrorCode::DomainNotInvariant: return "DomainNotInvariant";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::InvalidConnectionSet: return "InvalidConnectionSet";
        case ErrorCode::TooManyDoubleCosetClasses: return "TooManyDoubleCosetClasses";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) raise(code, message);
}

} // namespace pcode
