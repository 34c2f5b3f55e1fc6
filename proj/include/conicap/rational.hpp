#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conicap {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading minus, ASCII digits only) into
/// canonical form. Throws Error{invalid_input} on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Exact nonnegative square root, or nullopt when q is not a rational square.
std::optional<Rational> rat_sqrt(const Rational& q);

/// Exact integer square root of n >= 0, or nullopt when n is not a square.
std::optional<Integer> int_sqrt_exact(const Integer& n);

bool is_rational_square(const Rational& q);

struct SquarefreeDecomposition {
    Integer radicand;   // squarefree, sign carried here
    Rational multiplier; // > 0
};

/// q = multiplier^2 * radicand. radicand == 1 iff q is a square.
/// Throws Error{zero_input} for q = 0.
SquarefreeDecomposition squarefree_decompose(const Rational& q);

/// Squarefree part of a nonzero integer (same contract as above, integer input).
SquarefreeDecomposition squarefree_decompose(const Integer& n);

bool is_squarefree(const Integer& n);

/// max(|p|, q) for p/q in lowest terms.
Integer height(const Rational& q);

/// Every rational of height <= bound, ordered by height, then by value.
std::vector<Rational> rationals_up_to_height(unsigned long bound);

} // namespace conicap
