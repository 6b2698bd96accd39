#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynmds {

enum class ErrorCode {
    InvalidField,
    InvalidElement,
    ZeroInverse,
    NoGenerator,
    ShapeMismatch,
    NotSquare,
    IndexOutOfRange,
    Singular,
    ZeroConstant,
    NotMds,
    BadPivot,
    NoInstance,
    MissingClass,
    DuplicateClass,
    EmptySecret,
    InvalidBlock,
    Parse,
};

/// Stable name of an error code, as printed by the CLI.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace dynmds
