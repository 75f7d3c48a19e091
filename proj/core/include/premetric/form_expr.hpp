#pragma once

#include <string>
#include <string_view>

#include "premetric/form.hpp"

namespace premetric {

/// Parses the form-expression language
///
///   expr  := term (('+' | '-') term)*
///   term  := coeff ('*' basis)? | basis
///   coeff := polynomial in x0..x(n-1): integer or rational literals,
///            '+', '-', '*', '^' (nonnegative integer powers), parentheses
///   basis := 'dx' INT ('^' 'dx' INT)*
///
/// Whitespace is ignored. On complex-mode charts the imaginary unit 'i' is
/// also accepted inside coefficients. Every term must have the expected
/// degree; a repeated differential makes the term vanish.
/// Throws ParseError with a 1-based line and column.
Form parse_form(std::string_view text, const Chart& chart, int expected_degree, Twist twist = Twist::Untwisted);

/// Parses a coefficient polynomial (no differentials allowed).
Polynomial parse_polynomial(std::string_view text, const Chart& chart);

/// Canonical printing; parse_form(print_form(f), ...) == f.
inline std::string print_form(const Form& f) { return f.to_string(); }

}  // namespace premetric
