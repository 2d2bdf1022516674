#include <pqca/error.hpp>

namespace pqca {

const char *to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonTerminating: return "NonTerminating";
    case ErrorCode::Negative: return "Negative";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::OutOfCone: return "OutOfCone";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::WorkLimit: return "WorkLimit";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace pqca
