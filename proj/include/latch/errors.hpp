#pragma once

#include <stdexcept>
#include <string>

namespace latch {

/// Error categories raised by the library. Each value maps 1:1 to a
/// documented failure mode of some operation.
enum class ErrorCode {
    // image
    NotPGM,
    UnsupportedDepth,
    Truncated,
    Malformed,
    OutOfBounds,
    BadScale,
    // detect
    ImageTooSmall,
    TooCloseToBorder,
    // pattern
    BadHeader,
    BadTripletCount,
    CoordinateOutOfRange,
    DegenerateTriplet,
    MissingInfo,
    GridSizeMismatch,
    LabelParse,
    NoPositives,
    NoNegatives,
    EmptyPairs,
    InsufficientCandidates,
    // match
    LengthMismatch,
    EmptyGallery,
    // eval
    NoKeypoints,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace latch
