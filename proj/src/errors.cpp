#include "pbias/errors.hpp"

namespace pbias {

std::string_view error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::MissingSourceOrTarget: return "MissingSourceOrTarget";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::SourceEqualsTarget: return "SourceEqualsTarget";
    case ErrorCode::NoSourceTargetPath: return "NoSourceTargetPath";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::PathLimitExceeded: return "PathLimitExceeded";
    case ErrorCode::BiasOutOfRange: return "BiasOutOfRange";
    case ErrorCode::ZeroOptimalCost: return "ZeroOptimalCost";
    case ErrorCode::ZeroCollectedReward: return "ZeroCollectedReward";
    case ErrorCode::NotFeasible: return "NotFeasible";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParameterConstraintViolated: return "ParameterConstraintViolated";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "UnknownError";
}

namespace {

std::string summarize(const std::vector<Violation>& vs) {
    std::string out;
    for (const auto& v : vs) {
        if (!out.empty()) out += "; ";
        out += std::string(error_name(v.code)) + ": " + v.detail;
    }
    return out;
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? ErrorCode::InvalidInput : violations.front().code, summarize(violations)),
      violations_(std::move(violations)) {}

bool ValidationError::has(ErrorCode code) const {
    for (const auto& v : violations_)
        if (v.code == code) return true;
    return false;
}

} // namespace pbias
