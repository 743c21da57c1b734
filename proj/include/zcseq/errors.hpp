#pragma once

#include <stdexcept>
#include <string>

namespace zcseq {

enum class ErrorCode {
    InvalidLength,
    InvalidRoot,
    EmptySequence,
    NonFiniteSample,
    NoPrimeExists,
    LengthMismatch,
    ZeroEnergy,
    NotPrimitive,
    InvalidSeed,
    DegreeMismatch,
    InvalidOrder,
    InvalidChip,
    InsufficientFamily,
    InvalidPreset,
    InvalidStep,
};

const char* to_string(ErrorCode code);

// Every validation failure in the library surfaces as this exception type.
class SequenceError : public std::invalid_argument {
public:
    SequenceError(ErrorCode code, const std::string& what)
        : std::invalid_argument(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace zcseq
