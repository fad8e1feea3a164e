#pragma once

#include <stdexcept>
#include <string>

namespace dhg {

enum class ErrorCode {
    EmptyTail,
    EmptyHead,
    VertexOutOfRange,
    DoubleInit,
    MergeSameClass,
    NotRepresentative,
    EmptyHypergraph,
    CyclicHypergraph,
    NotTransitive,
    TooManyVariables,
    UnusedVariable,
    DuplicateSet,
    BadN,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// All domain errors thrown by the library. `code()` identifies the failure
/// class; `what()` carries the human-readable detail (parse errors include
/// the offending line number).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace dhg
