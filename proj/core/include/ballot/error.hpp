#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ballot {

enum class ErrorCode {
    NonPositiveWeight,
    NotSorted,
    NotCoprime,
    DimensionMismatch,
    InvalidKey,
    ResourceLimit,
    NonpositiveTerm,
    InsufficientTerms,
    SingularSystem,
    SingularLeadingCoefficient,
    NonIntegralTerm,
    MalformedLine,
    NonContiguousIndices,
    CorruptCacheEntry,
    IoError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a stable code; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ballot
