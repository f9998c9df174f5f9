#include "noeth/noetherian_posdim.hpp"

#include <map>

#include "noeth/noetherian_zero.hpp"
#include "noeth/render.hpp"

namespace noeth {

bool NormalPositionReport::ok() const {
  if (!contraction_trivial || !extended_variety_is_origin) return false;
  for (const auto& e : monic_powers) {
    if (!e) return false;
  }
  return true;
}

std::string NormalPositionReport::failure() const {
  if (!contraction_trivial) {
    return "not in normal position: " + render(contraction_witnesses.front()) + " lies in the ideal";
  }
  for (std::size_t i = 0; i < monic_powers.size(); ++i) {
    if (!monic_powers[i]) return "not in normal position: no monic power of variable " + std::to_string(i + 1);
  }
  if (!extended_variety_is_origin) return "the extended ideal is not supported at the origin";
  return "";
}

namespace {

Exponents x_part(const Exponents& e, int nx) { return Exponents(e.begin(), e.begin() + nx); }

bool t_free(const Exponents& e, int nx) {
  for (std::size_t i = static_cast<std::size_t>(nx); i < e.size(); ++i) {
    if (e[i] != 0) return false;
  }
  return true;
}

}  // namespace

RPoly to_extended(const Poly& f, const ModuleOrder& x_order) {
  const int nx = f.ring().x_count();
  const RingPtr xr = f.ring().x_ring();
  const RingPtr tr = f.ring().t_ring();
  std::map<Monomial, std::vector<Term<Rational>>> grouped;
  for (const auto& t : f.terms()) {
    Monomial key{t.mono.pos, x_part(t.mono.exp, nx)};
    grouped[key].push_back({Monomial{0, Exponents(t.mono.exp.begin() + nx, t.mono.exp.end())}, t.coeff});
  }
  std::vector<Term<RationalFunction>> terms;
  for (auto& [key, ts] : grouped) {
    terms.push_back({key, RationalFunction(Poly::from_terms(tr, t_order(), std::move(ts)))});
  }
  return RPoly::from_terms(xr, x_order, std::move(terms));
}

GroebnerBasis<RationalFunction> extend_to_rational_coeffs(const GroebnerBasis<Rational>& G) {
  if (!is_elimination_for(G.order.base(), *G.ring)) {
    throw DomainError("order " + G.order.base().name() + " does not eliminate the x-block");
  }
  const ModuleOrder xo = key_order(G.order);
  GroebnerBasis<RationalFunction> out{G.ring->x_ring(), xo, {}, false};
  for (const auto& g : G.elements) {
    RPoly e = to_extended(g, xo);
    if (!e.is_zero()) out.elements.push_back(detail::make_monic(e));
  }
  return out;
}

int multiplicity_extended(const GroebnerBasis<RationalFunction>& G_ext) { return staircase(G_ext).multiplicity(); }

NormalPositionReport check_normal_position(const std::vector<Poly>& gens, const ModuleOrder& order) {
  if (gens.empty()) throw DomainError("no generators");
  const RingDescriptor& ring = gens.front().ring();
  if (!is_elimination_for(order.base(), ring)) {
    throw DomainError("order " + order.base().name() + " does not eliminate the x-block");
  }
  const int nx = ring.x_count();
  const auto G = buchberger(gens, order);
  NormalPositionReport rep;
  rep.gamma.assign(static_cast<std::size_t>(ring.t_count()), 0);
  rep.monic_powers.assign(static_cast<std::size_t>(nx), std::nullopt);
  for (const auto& g : G.elements) {
    const auto& lt = g.leading().mono.exp;
    bool x_free = true;
    for (int i = 0; i < nx; ++i) x_free = x_free && lt[static_cast<std::size_t>(i)] == 0;
    if (x_free) rep.contraction_witnesses.push_back(g);
    for (int i = 0; i < ring.t_count(); ++i) rep.gamma[static_cast<std::size_t>(i)] += lt[static_cast<std::size_t>(nx + i)];
    if (!t_free(lt, nx)) continue;
    int support = -1, count = 0;
    for (int i = 0; i < nx; ++i) {
      if (lt[static_cast<std::size_t>(i)] > 0) {
        support = i;
        ++count;
      }
    }
    if (count == 1 && !rep.monic_powers[static_cast<std::size_t>(support)]) {
      rep.monic_powers[static_cast<std::size_t>(support)] = lt[static_cast<std::size_t>(support)];
    }
  }
  rep.contraction_trivial = rep.contraction_witnesses.empty();
  try {
    const auto E = extend_to_rational_coeffs(G);
    const int mu = multiplicity_extended(E);
    bool origin = mu > 0;
    for (int k = 0; k < ring.rank() && origin; ++k) {
      for (int i = 0; i < nx && origin; ++i) {
        Exponents e(static_cast<std::size_t>(nx), 0);
        e[static_cast<std::size_t>(i)] = mu;
        const RPoly p = RPoly::monomial(E.ring, E.order, Monomial{k, e}, RationalFunction::constant(ring.t_ring(), 1));
        origin = normal_form(p, E).is_zero();
      }
    }
    rep.extended_variety_is_origin = origin;
  } catch (const InfiniteStaircase&) {
    rep.extended_variety_is_origin = false;
  }
  return rep;
}

namespace {

using States = std::vector<Poly>;

bool all_residual(const States& states, const std::vector<Monomial>& ext_lts, int nx) {
  for (const auto& s : states) {
    for (const auto& t : s.terms()) {
      if (divisible_by_any(Monomial{t.mono.pos, x_part(t.mono.exp, nx)}, ext_lts)) return false;
    }
  }
  return true;
}

States multiply_and_reduce(const States& states, const Exponents& shift, const GroebnerBasis<Rational>& G) {
  States out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(normal_form(s.mul_term(1, shift), G));
  return out;
}

}  // namespace

PositiveBasis noetherian_positive(const std::vector<Poly>& gens, const ModuleOrder& order, Schedule schedule) {
  const auto rep = check_normal_position(gens, order);
  if (!rep.ok()) throw DomainError(rep.failure());
  PositiveBasis B;
  B.source = buchberger(gens, order);
  B.extended = extend_to_rational_coeffs(B.source);
  B.gamma = rep.gamma;
  const Staircase S = staircase(B.extended);
  const int mu = S.multiplicity();
  B.multiplicity = mu;
  const RingPtr ring = B.source.ring;
  const int nx = ring->x_count();
  const int n = ring->nvars();
  const auto ext_lts = leading_monomials(B.extended.elements);

  std::vector<Monomial> keys;  // (position, alpha) with |alpha| < mu
  States start;
  for (int d = 0; d < mu; ++d) {
    for (int k = 0; k < ring->rank(); ++k) {
      for (const auto& a : monomials_of_degree(nx, d)) {
        keys.push_back(Monomial{k, a});
        Exponents full(a);
        full.resize(static_cast<std::size_t>(n), 0);
        start.push_back(make_monomial(ring, order, full, 1, k));
      }
    }
  }
  Exponents step(static_cast<std::size_t>(nx), 0);
  step.insert(step.end(), B.gamma.begin(), B.gamma.end());

  int max_deg = 1;
  for (const auto& g : B.source.elements) max_deg = std::max(max_deg, g.degree());
  const int cap = mu * max_deg;

  States states;
  bool done = false;
  if (schedule == Schedule::FastPath) {
    Exponents big(step);
    for (auto& e : big) e *= mu;
    states = multiply_and_reduce(start, big, B.source);
    done = all_residual(states, ext_lts, nx);
    if (done) B.rounds = mu;
  }
  if (!done) {
    states = start;
    while (!done) {
      if (B.rounds == cap) {
        throw DomainError("no stable coefficient matrix after " + std::to_string(cap) + " multiplications by t^gamma");
      }
      states = multiply_and_reduce(states, step, B.source);
      ++B.rounds;
      done = all_residual(states, ext_lts, nx);
    }
  }

  const ModuleOrder xo = key_order(order);
  std::map<Monomial, RDiffOp> ops;
  for (const auto& b : S.residual_monomials) ops.emplace(b, RDiffOp(ring));
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const RPoly ext = to_extended(states[i], xo);
    for (const auto& t : ext.terms()) ops.at(t.mono).add(keys[i], t.coeff);
  }
  for (const auto& b : S.residual_monomials) B.operators.push_back(std::move(ops.at(b)));
  return B;
}

std::vector<RDiffOp> cleanup_operators(const std::vector<RDiffOp>& ops) {
  std::vector<RDiffOp> out;
  for (const auto& L : ops) {
    if (L.is_zero()) {
      out.push_back(L);
      continue;
    }
    // common denominator
    std::optional<Poly> den;
    for (const auto& [k, c] : L.terms) {
      if (!den) {
        den = c.den();
      } else {
        *den = divide_exact(*den * c.den(), poly_gcd(*den, c.den()));
      }
    }
    std::vector<std::pair<Monomial, Poly>> nums;
    for (const auto& [k, c] : L.terms) nums.emplace_back(k, divide_exact(c.num() * *den, c.den()));
    Poly g = nums.front().second;
    for (const auto& [k, p] : nums) g = poly_gcd(g, p);
    RDiffOp M(L.ring, L.center);
    for (const auto& [k, p] : nums) M.add(k, RationalFunction(divide_exact(p, g)));
    out.push_back(std::move(M));
  }
  return out;
}

RationalFunction apply_on_variety(const RDiffOp& L, const Poly& f) {
  const RPoly ext = to_extended(f, ModuleOrder(TermOrder::lex()));
  RationalFunction sum;
  for (const auto& [k, c] : L.terms) {
    if (auto v = ext.coefficient(k)) sum = sum + c * *v;
  }
  return sum;
}

bool member_positive(const Poly& f, const std::vector<RDiffOp>& ops) {
  if (f.is_zero()) return true;
  for (const auto& L : ops) {
    if (!apply_on_variety(L, f).is_zero()) return false;
  }
  return true;
}

}  // namespace noeth
