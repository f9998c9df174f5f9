#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noeth/diffop.hpp"
#include "noeth/groebner.hpp"
#include "noeth/ratfun.hpp"

namespace noeth {

using RPoly = Polynomial<RationalFunction>;
using RDiffOp = DiffOp<RationalFunction>;

struct NormalPositionReport {
  bool contraction_trivial = false;
  std::vector<Poly> contraction_witnesses;     // basis elements free of x
  std::vector<std::optional<int>> monic_powers;  // per x-variable
  bool extended_variety_is_origin = false;
  Exponents gamma;  // over the t-block

  bool ok() const;
  /// First failed condition in words, empty when ok().
  std::string failure() const;
};

NormalPositionReport check_normal_position(const std::vector<Poly>& gens, const ModuleOrder& order);

/// f over Q[x, t] as an element of Q(t)[x] (rank preserved).
RPoly to_extended(const Poly& f, const ModuleOrder& x_order);

/// The same elements with t folded into the coefficients, made monic over
/// Q(t).  Requires an elimination order for the x-block.
GroebnerBasis<RationalFunction> extend_to_rational_coeffs(const GroebnerBasis<Rational>& G);

int multiplicity_extended(const GroebnerBasis<RationalFunction>& G_ext);

/// Incremental multiplies by t^gamma once per round; FastPath first tries
/// t^(mu*gamma) in a single step.
enum class Schedule { Incremental, FastPath };

struct PositiveBasis {
  std::vector<RDiffOp> operators;  // one per residual x-monomial, ascending
  int multiplicity = 0;
  Exponents gamma;
  int rounds = 0;  // multiplications by t^gamma performed
  GroebnerBasis<Rational> source;
  GroebnerBasis<RationalFunction> extended;
};

PositiveBasis noetherian_positive(const std::vector<Poly>& gens, const ModuleOrder& order,
                                  Schedule schedule = Schedule::Incremental);

/// Clears denominators and divides each operator by the gcd of its
/// coefficients over Q[t].
std::vector<RDiffOp> cleanup_operators(const std::vector<RDiffOp>& ops);

/// L(f) restricted to x = 0, as an element of Q(t).
RationalFunction apply_on_variety(const RDiffOp& L, const Poly& f);

bool member_positive(const Poly& f, const std::vector<RDiffOp>& ops);

}  // namespace noeth
