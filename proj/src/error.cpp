#include "conicap/error.hpp"

namespace conicap {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::division_by_zero: return "division_by_zero";
    case ErrorCode::radicand_mismatch: return "radicand_mismatch";
    case ErrorCode::zero_input: return "zero_input";
    case ErrorCode::invalid_map: return "invalid_map";
    case ErrorCode::zero_conic: return "zero_conic";
    case ErrorCode::degenerate_conic: return "degenerate_conic";
    case ErrorCode::negative_radicand: return "negative_radicand";
    case ErrorCode::degenerate_fiber: return "degenerate_fiber";
    case ErrorCode::indeterminate: return "indeterminate";
    case ErrorCode::not_on_curve: return "not_on_curve";
    case ErrorCode::singular_curve: return "singular_curve";
    case ErrorCode::not_order_four: return "not_order_four";
    case ErrorCode::singular_image: return "singular_image";
    case ErrorCode::zero_twist: return "zero_twist";
    case ErrorCode::disc_not_square: return "disc_not_square";
    case ErrorCode::disc_zero: return "disc_zero";
    case ErrorCode::disc_derivative_zero: return "disc_derivative_zero";
    case ErrorCode::k_zero: return "k_zero";
    case ErrorCode::trivial_progression: return "trivial_progression";
    case ErrorCode::excluded_locus: return "excluded_locus";
    case ErrorCode::invalid_triangle: return "invalid_triangle";
    case ErrorCode::not_arithmetic_progression: return "not_arithmetic_progression";
    case ErrorCode::no_point_found: return "no_point_found";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

bool is_input_error(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_input:
    case ErrorCode::invalid_map:
    case ErrorCode::zero_conic:
    case ErrorCode::radicand_mismatch:
        return true;
    default:
        return false;
    }
}

} // namespace conicap
