#pragma once

#include <stdexcept>
#include <string>

namespace hypermatch {

enum class ErrorCode {
    WrongEdgeSize,
    VertexOutOfRange,
    DuplicateVertexInEdge,
    DuplicateEdge,
    IndexOutOfRange,
    NotAMatching,
    DegreeViolation,
    EmptyEdgeSet,
    StateSpaceTooLarge,
    NotCombFree,
    TransitionNotOnPath,
    CapExceeded,
    ZeroRatio,
    BadParameters,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

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

} // namespace hypermatch
