#pragma once

#include <stdexcept>
#include <string>

namespace pqca {

enum class ErrorCode {
    NonCoprime,
    OutOfRange,
    EmptyWord,
    Overflow,
    NonTerminating,
    Negative,
    TooShort,
    ConsistencyViolation,
    Unrealizable,
    OutOfCone,
    PreconditionViolated,
    Infeasible,
    WorkLimit,
    NonPositive,
    Parse,
};

const char *to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pqca
