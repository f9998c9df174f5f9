#include "noeth/noetherian_zero.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace noeth {

std::string method_name(Method m) {
  switch (m) {
    case Method::Forward:
      return "forward";
    case Method::Backward:
      return "backward";
    case Method::Linear:
      return "linear";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "forward") return Method::Forward;
  if (name == "backward") return Method::Backward;
  if (name == "linear") return Method::Linear;
  throw DomainError("unknown method '" + name + "'");
}

std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> fill = [&](int i, int left) {
    if (i == n - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      fill(i + 1, left - k);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back(e);
    return out;
  }
  fill(0, d);
  return out;
}

std::vector<Poly> translate_to_origin(const std::vector<Poly>& gens, const std::vector<Rational>& point) {
  if (std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; })) return gens;
  std::vector<Poly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(substitute_affine(g, point));
  return out;
}

GroebnerBasis<Rational> primary_at_origin(const std::vector<Poly>& gens, const ModuleOrder& order,
                                          const std::vector<Rational>& center) {
  if (gens.empty()) throw DomainError("no generators");
  const RingPtr ring = gens.front().ring_ptr();
  if (ring->t_count() != 0) throw DomainError("ring has parameters; use the positive-dimensional algorithm");
  if (!center.empty() && static_cast<int>(center.size()) != ring->nvars()) {
    throw DomainError("center length does not match the ring");
  }
  auto G = buchberger(center.empty() ? gens : translate_to_origin(gens, center), order);
  const int mu = staircase(G).multiplicity();
  if (mu == 0) throw DomainError("center is not on the variety");
  for (int k = 0; k < ring->rank(); ++k) {
    for (int i = 0; i < ring->nvars(); ++i) {
      Exponents e(static_cast<std::size_t>(ring->nvars()), 0);
      e[static_cast<std::size_t>(i)] = mu;
      if (!is_member(make_monomial(ring, order, e, 1, k), G)) {
        throw DomainError("not primary at the center: " + ring->names()[static_cast<std::size_t>(i)] + "^" +
                          std::to_string(mu) + " is not in the ideal");
      }
    }
  }
  return G;
}

std::optional<Poly> backward_step(const Term<Rational>& g, const Poly& f) {
  if (f.is_zero()) throw DomainError("backward step by the zero polynomial");
  const Term<Rational> m = smallest_term(f.order(), f);
  if (!m.mono.divides(g.mono)) return std::nullopt;
  const Poly mf = Poly::monomial(f.ring_ptr(), f.order(), m.mono, m.coeff) - f;
  return mf.mul_term(g.coeff / m.coeff, m.mono.quotient_of(g.mono));
}

Poly backward_polynomial(const GroebnerBasis<Rational>& G, const Monomial& corner, int mu) {
  const auto lts = leading_monomials(G.elements);
  // Everything reachable by undoing a reduction step with some tail term.
  std::set<Monomial> reached{corner};
  std::vector<Monomial> queue{corner};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Monomial v = queue[q];
    for (const auto& g : G.elements) {
      const auto& lt = g.leading().mono;
      for (std::size_t s = 1; s < g.terms().size(); ++s) {
        const auto& tail = g.terms()[s].mono;
        if (!tail.divides(v)) continue;
        const Exponents w = tail.quotient_of(v);
        Monomial u{lt.pos, lt.exp};
        for (std::size_t i = 0; i < w.size(); ++i) u.exp[i] += w[i];
        if (u.degree() >= mu || reached.contains(u)) continue;
        reached.insert(u);
        queue.push_back(u);
      }
    }
  }
  // coefficient of the corner in NF(u), by recursion on the order
  std::map<Monomial, Rational> memo;
  std::function<Rational(const Monomial&)> coeff = [&](const Monomial& u) -> Rational {
    if (u.degree() >= mu) return 0;
    if (!divisible_by_any(u, lts)) return u == corner ? 1 : 0;
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    const Poly* div = nullptr;
    for (const auto& g : G.elements) {
      if (g.leading().mono.divides(u)) {
        div = &g;
        break;
      }
    }
    const Exponents w = div->leading().mono.quotient_of(u);
    Rational sum = 0;
    for (std::size_t s = 1; s < div->terms().size(); ++s) {
      const auto& t = div->terms()[s];
      Monomial m = t.mono;
      for (std::size_t i = 0; i < w.size(); ++i) m.exp[i] += w[i];
      const Rational c = coeff(m);
      if (c != 0) sum -= t.coeff / div->leading().coeff * c;
    }
    memo.emplace(u, sum);
    return sum;
  };
  std::vector<Term<Rational>> terms;
  for (const auto& u : reached) {
    Rational c = coeff(u);
    if (c != 0) terms.push_back({u, std::move(c)});
  }
  return Poly::from_terms(G.ring, G.order, std::move(terms));
}

std::vector<DiffOp<Rational>> canonicalize(const std::vector<DiffOp<Rational>>& ops, const Staircase& S,
                                           const ModuleOrder& order) {
  const int mu = S.multiplicity();
  std::vector<Monomial> columns(S.residual_monomials);
  std::set<Monomial> seen(columns.begin(), columns.end());
  for (const auto& L : ops) {
    for (const auto& [k, c] : L.terms) {
      if (seen.insert(k).second) columns.push_back(k);
    }
  }
  std::sort(columns.begin() + mu, columns.end());
  std::map<Monomial, int> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index[columns[i]] = static_cast<int>(i);
  const int ncols = static_cast<int>(columns.size());
  Matrix<Rational> m;
  for (const auto& L : ops) {
    std::vector<Rational> row(static_cast<std::size_t>(ncols), Rational(0));
    for (const auto& [k, c] : L.terms) row[static_cast<std::size_t>(index[k])] = c;
    m.push_back(std::move(row));
  }
  const auto ech = row_reduce(std::move(m), ncols);
  if (static_cast<int>(ech.pivots.size()) != mu || (mu > 0 && ech.pivots.back() != mu - 1)) {
    throw DomainError("operators do not form a basis dual to the staircase");
  }
  std::vector<DiffOp<Rational>> out;
  const RingPtr ring = ops.empty() ? nullptr : ops.front().ring;
  const auto center = ops.empty() ? std::vector<Rational>{} : ops.front().center;
  for (const auto& row : ech.rows) {
    DiffOp<Rational> L(ring, center);
    for (int c = 0; c < ncols; ++c) L.add(columns[static_cast<std::size_t>(c)], row[static_cast<std::size_t>(c)]);
    out.push_back(std::move(L));
  }
  const ModuleOrder ko = key_order(order);
  std::stable_sort(out.begin(), out.end(), [&](const DiffOp<Rational>& a, const DiffOp<Rational>& b) {
    return ko.compare(max_key(a, ko), max_key(b, ko)) < 0;
  });
  return out;
}

namespace {

std::vector<Rational> center_or_origin(const std::vector<Rational>& center, int n) {
  return center.empty() ? std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)) : center;
}

NoetherianBasis finish(std::vector<DiffOp<Rational>> ops, GroebnerBasis<Rational> G0, const Staircase& S,
                       std::vector<Rational> center, Method method) {
  for (auto& L : ops) L.center = center;
  NoetherianBasis B;
  B.operators = canonicalize(ops, S, G0.order);
  B.multiplicity = S.multiplicity();
  B.center = std::move(center);
  B.method = method;
  B.source = std::move(G0);
  return B;
}

}  // namespace

NoetherianBasis noetherian_forward(const GroebnerBasis<Rational>& G, const std::vector<Rational>& center0) {
  const auto center = center_or_origin(center0, G.ring->nvars());
  auto G0 = primary_at_origin(G.elements, G.order, center);
  const Staircase S = staircase(G0);
  const int mu = S.multiplicity();
  const int n = G.ring->nvars();
  std::map<Monomial, DiffOp<Rational>> ops;
  for (const auto& b : S.residual_monomials) ops.emplace(b, DiffOp<Rational>(G.ring));
  for (int k = 0; k < G.ring->rank(); ++k) {
    // NF(x^a e_k) built up as NF(x_i * NF(x^(a - e_i) e_k)).
    std::map<Exponents, Poly> layer;
    for (int d = 0; d < mu; ++d) {
      std::map<Exponents, Poly> next;
      bool any = false;
      for (const auto& a : monomials_of_degree(n, d)) {
        Poly nf(G.ring, G.order);
        if (d == 0) {
          nf = normal_form(make_monomial(G.ring, G.order, a, 1, k), G0);
        } else {
          const auto i = static_cast<std::size_t>(std::find_if(a.begin(), a.end(), [](int e) { return e > 0; }) - a.begin());
          Exponents prev = a;
          --prev[i];
          Exponents shift(static_cast<std::size_t>(n), 0);
          shift[i] = 1;
          const Poly& p = layer.at(prev);
          if (!p.is_zero()) nf = normal_form(p.mul_term(1, shift), G0);
        }
        for (const auto& t : nf.terms()) ops.at(t.mono).add(Monomial{k, a}, t.coeff);
        any = any || !nf.is_zero();
        next.emplace(a, std::move(nf));
      }
      layer = std::move(next);
      if (!any) break;
    }
  }
  std::vector<DiffOp<Rational>> list;
  for (auto& [b, L] : ops) list.push_back(std::move(L));
  return finish(std::move(list), std::move(G0), S, center, Method::Forward);
}

NoetherianBasis noetherian_backward(const GroebnerBasis<Rational>& G, const std::vector<Rational>& center0) {
  const auto center = center_or_origin(center0, G.ring->nvars());
  auto G0 = primary_at_origin(G.elements, G.order, center);
  const Staircase S = staircase(G0);
  const int mu = S.multiplicity();
  std::vector<DiffOp<Rational>> seeds;
  for (const auto& c : corner_monomials(S, G0)) seeds.push_back(dual_of_polynomial(backward_polynomial(G0, c, mu)));
  auto ops = closure(seeds);
  if (static_cast<int>(ops.size()) != mu) {
    throw DomainError("backward closure has dimension " + std::to_string(ops.size()) + ", expected " +
                      std::to_string(mu));
  }
  return finish(std::move(ops), std::move(G0), S, center, Method::Backward);
}

NoetherianBasis noetherian_linear(const std::vector<Poly>& gens, const ModuleOrder& order, int mu,
                                  const std::vector<Rational>& center0) {
  if (gens.empty()) throw DomainError("no generators");
  const RingPtr ring = gens.front().ring_ptr();
  const auto center = center_or_origin(center0, ring->nvars());
  auto G0 = primary_at_origin(gens, order, center);
  const Staircase S = staircase(G0);
  const auto gens0 = translate_to_origin(gens, center);
  const int n = ring->nvars();
  const ModuleOrder ascending(TermOrder::deglex(), Precedence::TermOverPosition);

  std::vector<DiffOp<Rational>> ops;
  SpanBuilder<Rational> V;
  while (static_cast<int>(ops.size()) < mu) {
    int bound = 0;
    for (const auto& L : ops) bound = std::max(bound, L.degree() + 1);
    if (bound >= mu) break;
    // unknowns: coefficients of D(a) e_k with |a| <= bound, ascending
    std::vector<Monomial> unknowns;
    for (int d = 0; d <= bound; ++d) {
      for (int k = 0; k < ring->rank(); ++k) {
        for (const auto& a : monomials_of_degree(n, d)) unknowns.push_back(Monomial{k, a});
      }
    }
    std::sort(unknowns.begin(), unknowns.end(),
              [&](const Monomial& a, const Monomial& b) { return ascending.compare(a, b) < 0; });
    const int nu = static_cast<int>(unknowns.size());
    std::map<std::pair<int, Monomial>, std::vector<Rational>> closed_rows;
    for (int u = 0; u < nu; ++u) {
      DiffOp<Rational> D(ring);
      D.add(unknowns[static_cast<std::size_t>(u)], 1);
      for (int j = 0; j < n; ++j) {
        for (const auto& [key, c] : V.reduce(sigma(D, j)).terms) {
          auto& row = closed_rows[{j, key}];
          if (row.empty()) row.assign(static_cast<std::size_t>(nu), Rational(0));
          row[static_cast<std::size_t>(u)] = c;
        }
      }
    }
    Matrix<Rational> m;
    for (auto& [key, row] : closed_rows) m.push_back(std::move(row));
    for (const auto& g : gens0) {
      std::vector<Rational> row(static_cast<std::size_t>(nu), Rational(0));
      for (int u = 0; u < nu; ++u) {
        if (auto c = g.coefficient(unknowns[static_cast<std::size_t>(u)])) row[static_cast<std::size_t>(u)] = *c;
      }
      m.push_back(std::move(row));
    }
    Matrix<Rational> fresh;
    for (const auto& v : nullspace(m, nu, Rational(1))) {
      DiffOp<Rational> L(ring);
      for (int u = 0; u < nu; ++u) L.add(unknowns[static_cast<std::size_t>(u)], v[static_cast<std::size_t>(u)]);
      L = V.reduce(std::move(L));
      if (L.is_zero()) continue;
      std::vector<Rational> row(static_cast<std::size_t>(nu), Rational(0));
      for (int u = 0; u < nu; ++u) row[static_cast<std::size_t>(u)] = L.coefficient(unknowns[static_cast<std::size_t>(u)]);
      fresh.push_back(std::move(row));
    }
    if (fresh.empty()) break;
    const auto ech = row_reduce(std::move(fresh), nu);
    DiffOp<Rational> L(ring);
    for (int u = 0; u < nu; ++u) L.add(unknowns[static_cast<std::size_t>(u)], ech.rows.front()[static_cast<std::size_t>(u)]);
    V.insert(L);
    ops.push_back(std::move(L));
  }
  if (static_cast<int>(ops.size()) != mu) {
    throw DomainError("linear system ran out of solutions after " + std::to_string(ops.size()) + " of " +
                      std::to_string(mu) + " operators");
  }
  return finish(std::move(ops), std::move(G0), S, center, Method::Linear);
}

NoetherianBasis noetherian_basis(const std::vector<Poly>& gens, const ModuleOrder& order,
                                 const std::vector<Rational>& center, Method method) {
  switch (method) {
    case Method::Forward:
      return noetherian_forward(buchberger(gens, order), center);
    case Method::Backward:
      return noetherian_backward(buchberger(gens, order), center);
    case Method::Linear: {
      const int mu = staircase(primary_at_origin(gens, order, center)).multiplicity();
      return noetherian_linear(gens, order, mu, center);
    }
  }
  throw DomainError("unknown method");
}

std::vector<Poly> ideal_from_conditions(const std::vector<DiffOp<Rational>>& ops, int degree_bound,
                                        const ModuleOrder& order) {
  if (ops.empty()) throw DomainError("no operators");
  if (!is_closed(ops)) throw DomainError("operators are not closed under the sigma maps");
  const RingPtr ring = ops.front().ring;
  const int n = ring->nvars();
  std::vector<Monomial> columns;
  for (int d = 0; d <= degree_bound; ++d) {
    for (int k = 0; k < ring->rank(); ++k) {
      for (const auto& a : monomials_of_degree(n, d)) columns.push_back(Monomial{k, a});
    }
  }
  const int nc = static_cast<int>(columns.size());
  Matrix<Rational> m;
  for (const auto& L : ops) {
    std::vector<Rational> row(static_cast<std::size_t>(nc), Rational(0));
    for (int c = 0; c < nc; ++c) row[static_cast<std::size_t>(c)] = L.coefficient(columns[static_cast<std::size_t>(c)]);
    m.push_back(std::move(row));
  }
  std::vector<Rational> back;
  for (const auto& c : ops.front().center) back.push_back(-c);
  std::vector<Poly> polys;
  for (const auto& v : nullspace(m, nc, Rational(1))) {
    std::vector<Term<Rational>> terms;
    for (int c = 0; c < nc; ++c) {
      if (v[static_cast<std::size_t>(c)] != 0) terms.push_back({columns[static_cast<std::size_t>(c)], v[static_cast<std::size_t>(c)]});
    }
    Poly p = Poly::from_terms(ring, order, std::move(terms));
    polys.push_back(back.empty() ? p : substitute_affine(p, back));
  }
  if (polys.empty()) throw DomainError("no polynomial of the given degree satisfies the conditions");
  return buchberger(polys, order).elements;
}

}  // namespace noeth
