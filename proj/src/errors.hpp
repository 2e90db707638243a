#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace freeindex {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    NonPositiveDistance,
    TriangleInequalityViolated,
    SamePoint,
    AlignedMetric,
    WrongRegime,
    AlphaOutOfRange,
    IoError,
    Internal,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:            return "InvalidArgument";
        case ErrorCode::ParseError:                 return "ParseError";
        case ErrorCode::NonPositiveDistance:        return "NonPositiveDistance";
        case ErrorCode::TriangleInequalityViolated: return "TriangleInequalityViolated";
        case ErrorCode::SamePoint:                  return "SamePoint";
        case ErrorCode::AlignedMetric:              return "AlignedMetric";
        case ErrorCode::WrongRegime:                return "WrongRegime";
        case ErrorCode::AlphaOutOfRange:            return "AlphaOutOfRange";
        case ErrorCode::IoError:                    return "IoError";
        case ErrorCode::Internal:                   return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, std::string message) {
    throw Error(code, std::move(message));
}

}  // namespace freeindex
