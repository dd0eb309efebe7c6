#pragma once

#include "expsolve/equation.hpp"

#include <string_view>

namespace expsolve {

/// Parses "lhs = rhs" in the equation language, e.g.
///   f^3 + 4*f*f' + f' - f = exp(3z) + 7*exp(2z) + 7*exp(z)
/// Throws SyntaxError, ShapeError or NonPolynomialExponent, each with a SourceSpan.
EquationSpec parse_equation(std::string_view text);

/// Parses an f-free expression such as "(z/(z+1))*exp(z^2 + 2)".
ExpPolynomial parse_function(std::string_view text);

} // namespace expsolve
