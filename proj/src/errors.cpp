#include "spde/errors.hpp"

namespace spde {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::unknown_field: return "UnknownField";
        case ErrorCode::range_error: return "RangeError";
        case ErrorCode::config_error: return "ConfigError";
        case ErrorCode::small_jump_mass_absent: return "SmallJumpMassAbsent";
        case ErrorCode::infinite_intensity: return "InfiniteIntensity";
        case ErrorCode::jump_budget_exceeded: return "JumpBudgetExceeded";
        case ErrorCode::non_finite: return "NonFinite";
        case ErrorCode::empty_sample: return "EmptySample";
        case ErrorCode::numerical_failure: return "NumericalFailure";
        case ErrorCode::invariant_violation: return "InvariantViolation";
    }
    return "UnknownError";
}

} // namespace spde
