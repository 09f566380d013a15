#pragma once

#include <stdexcept>
#include <string>

namespace diskspace {

// Error taxonomy shared by all modules. Each condition the public
// operations can raise maps to one code; the CLI turns any of these
// into exit code 2.
enum class ErrorCode {
    OutOfDomain,
    MalformedSpec,
    StepUnderflow,
    NonConvergence,
    EmptyGrid,
    ConstraintViolated,
    NotHarmonic,
    DerivativeUnavailable,
    ResolutionExceeded,
    BatteryUnavailable,
    InvalidSelfMap,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::MalformedSpec: return "MalformedSpec";
        case ErrorCode::StepUnderflow: return "StepUnderflow";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::EmptyGrid: return "EmptyGrid";
        case ErrorCode::ConstraintViolated: return "ConstraintViolated";
        case ErrorCode::NotHarmonic: return "NotHarmonic";
        case ErrorCode::DerivativeUnavailable: return "DerivativeUnavailable";
        case ErrorCode::ResolutionExceeded: return "ResolutionExceeded";
        case ErrorCode::BatteryUnavailable: return "BatteryUnavailable";
        case ErrorCode::InvalidSelfMap: return "InvalidSelfMap";
    }
    return "Unknown";
}

} // namespace diskspace
