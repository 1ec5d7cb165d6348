#pragma once

#include "toricdeg/poly.hpp"

#include <string>
#include <string_view>

namespace toricdeg {

// Text form of a homogeneous polynomial:
//
//   poly   := term (('+'|'-') term)*       (a leading sign is accepted)
//   term   := [coeff ['*']] factor ('*' factor)*
//   factor := 'x' index ['^' exponent]
//   coeff  := integer | integer '/' integer
//
// Whitespace is ignored. Example: "3*x0^2*x1 - 5/2*x2^3".

/// Throws SyntaxError, IndexError (index > n), DegreeError (a term of
/// degree != d) or ZeroPolynomial (every term cancels).
HomogPoly parse_poly(std::string_view text, int n, int d);

/// Parses with n = largest variable index and d = degree of the first term.
HomogPoly parse_poly(std::string_view text);

/// Canonical text: terms in graded-lex order, unit coefficients omitted.
std::string format_poly(const HomogPoly& f);

std::string format_monomial(const Exponent& u);

} // namespace toricdeg
