#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "noeth/order.hpp"
#include "noeth/polynomial.hpp"

namespace noeth {

/// Raised when the quotient by a basis is not finite-dimensional.
class InfiniteStaircase : public DomainError {
public:
  InfiniteStaircase() : DomainError("infinite staircase") {}
};

template <class C>
struct GroebnerBasis {
  RingPtr ring;
  ModuleOrder order;
  std::vector<Polynomial<C>> elements;
  bool reduced = false;
};

struct Staircase {
  std::vector<Monomial> residual_monomials;  // ascending under the basis order
  int multiplicity() const { return static_cast<int>(residual_monomials.size()); }
};

/// One rewrite of the σ-largest term of f divisible by LT(g), or nullopt.
template <class C>
std::optional<Polynomial<C>> one_step_reduce(const Polynomial<C>& f, const Polynomial<C>& g) {
  if (g.is_zero()) throw DomainError("reduction by the zero polynomial");
  const Polynomial<C> gg = g.with_order(f.order());
  const auto& lg = gg.leading();
  for (const auto& t : f.terms()) {
    if (lg.mono.divides(t.mono)) {
      return f.sub_mul_term(t.coeff / lg.coeff, lg.mono.quotient_of(t.mono), gg);
    }
  }
  return std::nullopt;
}

/// Full remainder of f against `basis`: always rewrites the largest
/// reducible term, trying divisors in stored order.
template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const std::vector<Polynomial<C>>& basis,
                          const ModuleOrder& order) {
  Polynomial<C> p = f.with_order(order);
  std::vector<Term<C>> rest;
  while (!p.is_zero()) {
    const Term<C> lt = p.leading();
    const Polynomial<C>* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && g.leading().mono.divides(lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      rest.push_back(lt);
      p = p.without_leading();
      continue;
    }
    const auto& lg = divisor->leading();
    p = p.sub_mul_term(lt.coeff / lg.coeff, lg.mono.quotient_of(lt.mono), *divisor);
  }
  // `rest` is already strictly descending.
  return Polynomial<C>::from_terms(f.ring_ptr(), order, std::move(rest));
}

template <class C>
Polynomial<C> normal_form(const Polynomial<C>& f, const GroebnerBasis<C>& G) {
  return normal_form(f, G.elements, G.order);
}

template <class C>
bool is_member(const Polynomial<C>& f, const GroebnerBasis<C>& G) {
  return normal_form(f, G).is_zero();
}

/// lcm-cancelled combination of f and g; zero when their leading
/// positions differ.
template <class C>
Polynomial<C> s_polynomial(const Polynomial<C>& f, const Polynomial<C>& g0) {
  const Polynomial<C> g = g0.with_order(f.order());
  const auto& lf = f.leading();
  const auto& lg = g.leading();
  if (lf.mono.pos != lg.mono.pos) return Polynomial<C>(f.ring_ptr(), f.order());
  const Exponents l = noeth::lcm(lf.mono.exp, lg.mono.exp);
  const Monomial lm{lf.mono.pos, l};
  const Polynomial<C> a = f.mul_term(one_like(lf.coeff) / lf.coeff, lf.mono.quotient_of(lm));
  return a.sub_mul_term(one_like(lg.coeff) / lg.coeff, lg.mono.quotient_of(lm), g);
}

namespace detail {

template <class C>
Polynomial<C> make_monic(const Polynomial<C>& p) {
  if (p.is_zero()) return p;
  const C& lc = p.leading().coeff;
  return p.scaled(one_like(lc) / lc);
}

template <class C>
std::vector<Polynomial<C>> reduce_basis(std::vector<Polynomial<C>> G, const ModuleOrder& order) {
  // Drop elements whose leading term is divisible by another's.
  std::vector<Polynomial<C>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = G[i].leading().mono;
      const auto& mj = G[j].leading().mono;
      if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial<C>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    minimal[i] = make_monic(normal_form(minimal[i], others, order));
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial<C>& a, const Polynomial<C>& b) {
    return order.compare(a.leading().mono, b.leading().mono) > 0;
  });
  return minimal;
}

}  // namespace detail

/// Reduced Gröbner basis of the ideal (or submodule) generated by `gens`.
/// Buchberger's algorithm with the normal selection strategy, the
/// coprime-leading-term criterion (ideals only) and the chain criterion.
template <class C>
GroebnerBasis<C> buchberger(const std::vector<Polynomial<C>>& gens, const ModuleOrder& order) {
  if (gens.empty()) throw DomainError("no generators");
  const RingPtr ring = gens.front().ring_ptr();
  order.base().check_ring(*ring);

  std::vector<Polynomial<C>> G;
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  auto add = [&](Polynomial<C> g) {
    const std::size_t k = G.size();
    G.push_back(std::move(g));
    for (std::size_t i = 0; i < k; ++i) {
      if (G[i].leading().mono.pos == G[k].leading().mono.pos) pairs.insert({i, k});
    }
  };

  for (const auto& g : gens) {
    if (!g.ring().same_variables(*ring) || g.ring().rank() != ring->rank()) {
      throw DomainError("ring mismatch");
    }
    Polynomial<C> r = normal_form(g, G, order);
    if (!r.is_zero()) add(detail::make_monic(r));
  }

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) {
    const auto& a = G[p.first].leading().mono;
    return Monomial{a.pos, noeth::lcm(a.exp, G[p.second].leading().mono.exp)};
  };

  while (!pairs.empty()) {
    auto best = pairs.begin();
    Monomial best_lcm = pair_lcm(*best);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      Monomial l = pair_lcm(*it);
      if (order.compare(l, best_lcm) < 0) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    const auto& li = G[i].leading().mono;
    const auto& lj = G[j].leading().mono;
    if (ring->rank() == 1 && coprime(li.exp, lj.exp)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!G[k].leading().mono.divides(best_lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
      chain = !pairs.contains(key(i, k)) && !pairs.contains(key(j, k));
    }
    if (chain) continue;

    Polynomial<C> r = normal_form(s_polynomial(G[i], G[j]), G, order);
    if (!r.is_zero()) add(detail::make_monic(r));
  }

  GroebnerBasis<C> out{ring, order, {}, true};
  if (!G.empty()) out.elements = detail::reduce_basis(std::move(G), order);
  return out;
}

/// Minimal generators of the leading-term ideal, sorted structurally.
template <class C>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<C>>& G) {
  std::vector<Monomial> lts;
  for (const auto& g : G) {
    if (!g.is_zero()) lts.push_back(g.leading().mono);
  }
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < lts.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lts.size() && !redundant; ++j) {
      if (i != j && lts[j].divides(lts[i]) && (lts[j] != lts[i] || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(lts[i]);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts);

/// Residual monomials of a leading-term set; throws InfiniteStaircase
/// unless every variable has a pure power among the leading terms at
/// every position.
Staircase staircase_of(const std::vector<Monomial>& lts, int nvars, int rank, const ModuleOrder& order);

template <class C>
Staircase staircase(const GroebnerBasis<C>& G) {
  return staircase_of(leading_monomials(G.elements), G.ring->nvars(), G.ring->rank(), G.order);
}

/// Residual monomials m with x_i * m in LT for every variable.
std::vector<Monomial> corner_monomials(const Staircase& S, const std::vector<Monomial>& lts);

template <class C>
std::vector<Monomial> corner_monomials(const Staircase& S, const GroebnerBasis<C>& G) {
  return corner_monomials(S, leading_monomials(G.elements));
}

/// Gröbner basis of gens ∩ Q[t]; requires an elimination order.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, const ModuleOrder& order);

}  // namespace noeth
