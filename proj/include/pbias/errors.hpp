#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pbias {

enum class ErrorCode {
    CycleDetected,
    NegativeWeight,
    MissingSourceOrTarget,
    DuplicateEdge,
    DuplicateNode,
    UnknownEndpoint,
    SourceEqualsTarget,
    NoSourceTargetPath,
    UnknownNode,
    UnknownEdge,
    PathLimitExceeded,
    BiasOutOfRange,
    ZeroOptimalCost,
    ZeroCollectedReward,
    NotFeasible,
    SearchBudgetExceeded,
    PreconditionViolated,
    ParameterConstraintViolated,
    UnknownFamily,
    InvalidInput,
};

std::string_view error_name(ErrorCode code);

// Domain error carrying one of the named codes. The CLI prints the name verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }
    std::string_view name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

struct Violation {
    ErrorCode code;
    std::string detail;
};

// Thrown by validate; lists every violation found, not just the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }
    bool has(ErrorCode code) const;

private:
    std::vector<Violation> violations_;
};

} // namespace pbias
