#pragma once

#include "wlab/polynomial.hpp"
#include "wlab/projective.hpp"

#include <string>
#include <vector>

namespace wlab {

// Parse `3/2*u^2*v - v^3 + 1` over a declared ordered variable list. The `*`
// between a coefficient and a monomial may be omitted; parentheses and unary
// minus are supported. Throws input_error with a column position.
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

Rat parse_rational(const std::string& text);

// "(0:0:1)"
ProjPoint parse_point(const std::string& text);

} // namespace wlab
