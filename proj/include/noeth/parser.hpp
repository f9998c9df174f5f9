#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noeth/order.hpp"
#include "noeth/polynomial.hpp"

namespace noeth {

/// One primary component of a user-supplied decomposition.
struct Component {
  std::vector<Poly> generators;
  std::vector<Rational> center;
};

/// A parsed problem file.
///
///   ring x, y | t;                  # `|` starts the parameter block
///   order product(degrevlex, lex);  # lex | deglex | degrevlex | product(a,b)
///   module_order top;               # top (term over position) | pot
///   ideal y^2, x^2 - y;             # or: module [x, 1], [y, x];
///   component center 1, 0 module [x - 1, 1], [y, 0];
///   center 0, 0;
///   dual z, t;                      # names of the solution variables
struct ProblemSpec {
  RingPtr ring;
  TermOrder order = TermOrder::deglex();
  std::optional<Precedence> precedence;
  std::vector<Poly> generators;
  bool is_module = false;
  std::vector<Rational> center;       // defaults to the origin
  std::vector<Component> components;  // empty unless given
  std::vector<std::string> dual_names;

  ModuleOrder module_order() const {
    return ModuleOrder(order, precedence.value_or(Precedence::TermOverPosition));
  }
};

ProblemSpec parse_problem(std::string_view text);

/// Parses a polynomial, or a module vector `[f1, ..., fs]` when the ring
/// has rank > 1.
Poly parse_polynomial(std::string_view text, RingPtr ring, const ModuleOrder& order);

}  // namespace noeth
