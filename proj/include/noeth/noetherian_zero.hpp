#pragma once

#include <optional>
#include <string>
#include <vector>

#include "noeth/diffop.hpp"
#include "noeth/groebner.hpp"

namespace noeth {

enum class Method { Forward, Backward, Linear };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct NoetherianBasis {
  std::vector<DiffOp<Rational>> operators;
  int multiplicity = 0;
  std::vector<Rational> center;
  Method method = Method::Forward;
  GroebnerBasis<Rational> source;  // of the ideal moved to the origin
};

/// Generators with the point moved to the origin: g(v + point).
std::vector<Poly> translate_to_origin(const std::vector<Poly>& gens, const std::vector<Rational>& point);

/// Reduced basis of the translated ideal after checking that it is
/// zero-dimensional and primary at the origin.
GroebnerBasis<Rational> primary_at_origin(const std::vector<Poly>& gens, const ModuleOrder& order,
                                          const std::vector<Rational>& center);

/// (g/m)(m - f) with m the signed smallest term of f, when m divides g.
std::optional<Poly> backward_step(const Term<Rational>& g, const Poly& f);

/// Sum over all monomials u of (coefficient of `corner` in NF(u)) * u,
/// found by rewriting backwards from the corner. G must sit at the origin.
Poly backward_polynomial(const GroebnerBasis<Rational>& G, const Monomial& corner, int mu);

NoetherianBasis noetherian_forward(const GroebnerBasis<Rational>& G, const std::vector<Rational>& center = {});
NoetherianBasis noetherian_backward(const GroebnerBasis<Rational>& G, const std::vector<Rational>& center = {});
NoetherianBasis noetherian_linear(const std::vector<Poly>& gens, const ModuleOrder& order, int mu,
                                  const std::vector<Rational>& center = {});

NoetherianBasis noetherian_basis(const std::vector<Poly>& gens, const ModuleOrder& order,
                                 const std::vector<Rational>& center, Method method);

/// Rewrites a basis of the dual space as the basis dual to the staircase
/// (L_b(x^b') = delta), sorted by leading key.
std::vector<DiffOp<Rational>> canonicalize(const std::vector<DiffOp<Rational>>& ops, const Staircase& S,
                                           const ModuleOrder& order);

/// Reduced Gröbner basis of everything up to `degree_bound` killed by
/// the (closed) operator space.
std::vector<Poly> ideal_from_conditions(const std::vector<DiffOp<Rational>>& ops, int degree_bound,
                                        const ModuleOrder& order);

/// All exponent vectors of total degree d in n variables, DegLex descending.
std::vector<Exponents> monomials_of_degree(int n, int d);

}  // namespace noeth
