#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace anyonsim {

enum class ErrorCode {
    MalformedToken,
    IndexOutOfRange,
    DimensionMismatch,
    OddCount,
    TooLarge,
    WrongSize,
    NotNormalized,
    NotAMatching,
    NotUnitary,
    InvalidWeave,
    GapClosed,
    InvalidPath,
    NotNormalizable,
    DegenerateFit,
    IoError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can classify it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace anyonsim
