#pragma once

#include <string>

#include "pk/polynomial.hpp"

namespace pk {

// Expression grammar: integers, rational literals a/b, variable names,
// + - * ^ with nonnegative integer exponents, parentheses. No implicit
// multiplication. In a Gaussian ring the name `i` is the imaginary unit.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

}  // namespace pk
