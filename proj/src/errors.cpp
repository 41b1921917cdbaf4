#include "hypmaj/errors.hpp"

namespace hypmaj {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyTuple: return "EmptyTuple";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::NotRealRooted: return "NotRealRooted";
        case ErrorCode::DegreeZero: return "DegreeZero";
        case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NonPositiveEps: return "NonPositiveEps";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ModeMismatch: return "ModeMismatch";
        case ErrorCode::NotMajorized: return "NotMajorized";
        case ErrorCode::FloatModeUnsupported: return "FloatModeUnsupported";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::InvalidIndices: return "InvalidIndices";
        case ErrorCode::CoefficientTooLarge: return "CoefficientTooLarge";
        case ErrorCode::EqualRoots: return "EqualRoots";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::SigmaTooLarge: return "SigmaTooLarge";
        case ErrorCode::NotStrict: return "NotStrict";
        case ErrorCode::NotDistinct: return "NotDistinct";
        case ErrorCode::ChainTooLong: return "ChainTooLong";
        case ErrorCode::ReplayMismatch: return "ReplayMismatch";
        case ErrorCode::InsufficientPrefix: return "InsufficientPrefix";
        case ErrorCode::ZeroTopTerm: return "ZeroTopTerm";
        case ErrorCode::InfeasibleGap: return "InfeasibleGap";
        case ErrorCode::GeneratorExhausted: return "GeneratorExhausted";
        case ErrorCode::UnknownSuite: return "UnknownSuite";
        case ErrorCode::Config: return "Config";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace hypmaj
