#include "dynmds/error.hpp"

namespace dynmds {

std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::InvalidElement: return "InvalidElement";
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::NoGenerator: return "NoGenerator";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::ZeroConstant: return "ZeroConstant";
        case ErrorCode::NotMds: return "NotMds";
        case ErrorCode::BadPivot: return "BadPivot";
        case ErrorCode::NoInstance: return "NoInstance";
        case ErrorCode::MissingClass: return "MissingClass";
        case ErrorCode::DuplicateClass: return "DuplicateClass";
        case ErrorCode::EmptySecret: return "EmptySecret";
        case ErrorCode::InvalidBlock: return "InvalidBlock";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace dynmds
