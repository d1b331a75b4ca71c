#pragma once

#include <stdexcept>
#include <string>

namespace lobkit {

enum class ErrorCode {
    UnknownEventType,
    MalformedRow,
    NonMonotoneTime,
    ColumnCountMismatch,
    NegativeSize,
    UnknownOrderId,
    CrossedBook,
    EmptyInput,
    InsufficientData,
    DegenerateAutocorrelation,
    ZeroVariance,
    EmptySide,
    EmptyBin,
    InvalidSpec,
    InvalidConfig,
    IoError,
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

}  // namespace lobkit
