#pragma once

#include <string>
#include <vector>

#include "noeth/diffop.hpp"
#include "noeth/polynomial.hpp"
#include "noeth/ratfun.hpp"

namespace noeth {

/// Power product such as `x^2*y`; empty for the unit monomial.
std::string render_power_product(const Exponents& exp, const std::vector<std::string>& names,
                                 const char* separator = "*");

/// Parser-compatible text: `x^2 - y`, `1/2*x^3 + x*y`, or `[x, 1]` for
/// module elements.
std::string render(const Poly& f);

/// `t^2 + 1`, or `(t)/(t + 1)` for proper fractions.
std::string render(const RationalFunction& c);

std::string render(const Rational& c);

/// Operator text in the d-basis: `1/2 dx^2 + dy`, `dx + t dy`, or
/// `(1, -dx)` for module operators.  Terms descend under `order`.
std::string render(const DiffOp<Rational>& L, const ModuleOrder& order);
std::string render(const DiffOp<RationalFunction>& L, const ModuleOrder& order);

}  // namespace noeth
