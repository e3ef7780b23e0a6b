#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace foldrib {

enum class ErrorCode {
    DanglingEdge,
    BadArity,
    Disconnected,
    NonPlanar,
    SyntaxError,
    LabelError,
    EmptyDiagram,
    CountMismatch,
    IoError,
    PreconditionViolated,
    NoLevelingFound,
    RoutingError,
    InvalidGrid,
    NotConvertible,
    NotSwitchable,
    NotNormalForm,
    DomainError,
    TooLarge,
    LayoutOverlap,
    InternalCheck,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace foldrib
