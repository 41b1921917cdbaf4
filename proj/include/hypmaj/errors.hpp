#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypmaj {

enum class ErrorCode {
    EmptyTuple,
    NonFinite,
    NotRealRooted,
    DegreeZero,
    DegreeTooSmall,
    DegreeMismatch,
    NonPositiveEps,
    LengthMismatch,
    ModeMismatch,
    NotMajorized,
    FloatModeUnsupported,
    DomainViolation,
    InvalidIndices,
    CoefficientTooLarge,
    EqualRoots,
    PreconditionViolated,
    SigmaTooLarge,
    NotStrict,
    NotDistinct,
    ChainTooLong,
    ReplayMismatch,
    InsufficientPrefix,
    ZeroTopTerm,
    InfeasibleGap,
    GeneratorExhausted,
    UnknownSuite,
    Config,
    Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// the CLI and the Python layer can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace hypmaj
