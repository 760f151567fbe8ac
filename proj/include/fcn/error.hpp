#pragma once

#include <stdexcept>
#include <string>

namespace fcn {

enum class ErrorKind {
    UnknownName,
    CompositionMismatch,
    IllTypedValue,
    NotEnumerable,
    NotAStar,
    BoundaryMismatch,
    IllTypedSubterm,
    NotSquare,
    InfiniteRecvCarrier,
    NotClosedLeft,
    ScriptUnderrun,
    ScriptOverrun,
    WrongMove,
    DepthExceeded,
    Parse,
    UnknownCell,
    Internal,
};

const char* error_kind_name(ErrorKind k);

// Every failure in the library is reported through this one exception type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fcn
