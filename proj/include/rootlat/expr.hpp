#pragma once

#include "rootlat/cyclo.hpp"

#include <string>

namespace rootlat {

/// Parse and evaluate an expression over exact cyclotomic constants.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (('+' | '-') term)*           left-associative
///   term   := factor (('*' | '/') factor)*       left-associative
///   factor := '-' factor | power
///   power  := atom ('^' ('-')? integer)?         binds tightest
///   atom   := integer | 'z(N)' | 'cos(pi/M)' | 'cos(pi*K/M)'
///           | 'sqrt(2)' | 'sqrt(5)' | '(' expr ')'
///
/// z(N) is the primitive N-th root of unity; cos(pi*k/m) desugars to
/// (z(2m)^k + z(2m)^-k)/2; sqrt(2) and sqrt(5) desugar to the corresponding
/// real cyclotomic values. Throws ParseError with a position on malformed
/// input and DivisionByZero on division by zero during evaluation.
CycElem parse_cyc_expr(const std::string& text);

}  // namespace rootlat
