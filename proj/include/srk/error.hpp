#pragma once

#include <stdexcept>
#include <string>

namespace srk {

enum class ErrorCode {
    zero_division,
    out_of_domain,
    not_orthogonal,
    singular_point,
    singular_expansion,
    invalid_parameter,
    pole_at_minus_one,
    diverging,
    inconsistent,
    precondition_failed,
    not_boundary_unimodular,
    all_zero,
    parse_error,
    validation_error,
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::zero_division: return "ZeroDivision";
        case ErrorCode::out_of_domain: return "OutOfDomain";
        case ErrorCode::not_orthogonal: return "NotOrthogonal";
        case ErrorCode::singular_point: return "SingularPoint";
        case ErrorCode::singular_expansion: return "SingularExpansion";
        case ErrorCode::invalid_parameter: return "InvalidParameter";
        case ErrorCode::pole_at_minus_one: return "PoleAtMinusOne";
        case ErrorCode::diverging: return "Diverging";
        case ErrorCode::inconsistent: return "Inconsistent";
        case ErrorCode::precondition_failed: return "PreconditionFailed";
        case ErrorCode::not_boundary_unimodular: return "NotBoundaryUnimodular";
        case ErrorCode::all_zero: return "AllZero";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::validation_error: return "ValidationError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* name() const { return error_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace srk
