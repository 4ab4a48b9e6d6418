#pragma once

#include <stdexcept>
#include <string>

namespace spde {

enum class ErrorCode {
    parse_error,
    unknown_field,
    range_error,
    config_error,
    small_jump_mass_absent,
    infinite_intensity,
    jump_budget_exceeded,
    non_finite,
    empty_sample,
    numerical_failure,
    invariant_violation,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace spde
