#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ffl/asymptotics.hpp"
#include "ffl/poly.hpp"

namespace ffl {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t position);
  std::size_t position;
};

/// Polynomial text over F_q, coefficients reduced mod q:
///
///   poly  := ws sign? term (ws sign ws term)* ws
///   term  := coeff (ws '*'? ws 'x' power?)? | 'x' power?
///   power := ws '^' ws digits
///   coeff := digits
///
/// e.g. "x^3+2x+1", "x^2 - x", "3*x^4 + x". Repeated powers add up.
Poly parse_poly(std::string_view text, const PolyRing& ring);

/// Fixed-point decimal rendering with the given number of significant
/// digits (scientific notation for very large or small magnitudes).
std::string format_decimal(const HighPrec& v, int digits = 30);

}  // namespace ffl
