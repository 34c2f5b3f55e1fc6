#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conicap {

// Stable identifiers; the CLI serializes them verbatim.
enum class ErrorCode {
    invalid_input,
    division_by_zero,
    radicand_mismatch,
    zero_input,
    invalid_map,
    zero_conic,
    degenerate_conic,
    negative_radicand,
    degenerate_fiber,
    indeterminate,
    not_on_curve,
    singular_curve,
    not_order_four,
    singular_image,
    zero_twist,
    disc_not_square,
    disc_zero,
    disc_derivative_zero,
    k_zero,
    trivial_progression,
    excluded_locus,
    invalid_triangle,
    not_arithmetic_progression,
    no_point_found,
    internal,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Exit-status class of an error: invalid input vs computational failure.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace conicap
