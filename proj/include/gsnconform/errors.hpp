#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gsnconform {

enum class ErrorCode {
    DuplicateId,
    UnknownId,
    KindViolation,
    CycleIntroduced,
    InvalidElement,
    UnknownPrinciple,
    NotAGoal,
    PrincipleMismatch,
    UnknownTarget,
    IllFormedGraph,
    UnknownChallenge,
    AlreadyResolved,
    InvalidArgument,
    IoError,
};

std::string to_string(ErrorCode code);

// Domain error. `subjects` carries the ids involved (for CycleIntroduced,
// the cycle path in traversal order).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::vector<std::string> subjects = {})
        : std::runtime_error(std::move(message)), code_(code), subjects_(std::move(subjects)) {}

    ErrorCode code() const { return code_; }
    const std::vector<std::string>& subjects() const { return subjects_; }

private:
    ErrorCode code_;
    std::vector<std::string> subjects_;
};

} // namespace gsnconform
