#include "ballot/error.hpp"

namespace ballot {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::NotSorted: return "NotSorted";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidKey: return "InvalidKey";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::NonpositiveTerm: return "NonpositiveTerm";
        case ErrorCode::InsufficientTerms: return "InsufficientTerms";
        case ErrorCode::SingularSystem: return "SingularSystem";
        case ErrorCode::SingularLeadingCoefficient: return "SingularLeadingCoefficient";
        case ErrorCode::NonIntegralTerm: return "NonIntegralTerm";
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::NonContiguousIndices: return "NonContiguousIndices";
        case ErrorCode::CorruptCacheEntry: return "CorruptCacheEntry";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace ballot
