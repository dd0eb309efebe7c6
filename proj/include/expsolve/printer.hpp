#pragma once

#include "expsolve/equation.hpp"

#include <string>

namespace expsolve {

/// Deterministic text that parse_function / parse_equation read back to the same value.
std::string print_canonical(const ExpPolynomial& x);
std::string print_canonical(const EquationSpec& spec);

/// "f", "f'", "f''", "f'''", "f^(4)", ...
std::string derivative_name(unsigned order);

/// "4*f*f'", "(z+1)*f''^2", "-1", ...
std::string print_monomial(const DiffMonomial& m);

} // namespace expsolve
