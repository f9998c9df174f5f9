#include "noeth/groebner.hpp"

#include <functional>

namespace noeth {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
  return std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) { return l.divides(m); });
}

Staircase staircase_of(const std::vector<Monomial>& lts, int nvars, int rank, const ModuleOrder& order) {
  for (int pos = 0; pos < rank; ++pos) {
    for (int v = 0; v < nvars; ++v) {
      const bool has_power = std::any_of(lts.begin(), lts.end(), [&](const Monomial& l) {
        if (l.pos != pos) return false;
        for (int i = 0; i < nvars; ++i) {
          if (i != v && l.exp[i] != 0) return false;
        }
        return true;
      });
      if (!has_power) throw InfiniteStaircase();
    }
  }
  std::set<Monomial> seen;
  std::vector<Monomial> stack;
  for (int pos = 0; pos < rank; ++pos) {
    Monomial one{pos, Exponents(static_cast<std::size_t>(nvars), 0)};
    if (!divisible_by_any(one, lts)) {
      seen.insert(one);
      stack.push_back(one);
    }
  }
  while (!stack.empty()) {
    Monomial m = std::move(stack.back());
    stack.pop_back();
    for (int v = 0; v < nvars; ++v) {
      Monomial next = m;
      ++next.exp[v];
      if (seen.contains(next) || divisible_by_any(next, lts)) continue;
      seen.insert(next);
      stack.push_back(std::move(next));
    }
  }
  Staircase s{{seen.begin(), seen.end()}};
  std::sort(s.residual_monomials.begin(), s.residual_monomials.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return s;
}

std::vector<Monomial> corner_monomials(const Staircase& S, const std::vector<Monomial>& lts) {
  std::vector<Monomial> corners;
  for (const auto& m : S.residual_monomials) {
    bool corner = true;
    for (std::size_t v = 0; v < m.exp.size() && corner; ++v) {
      Monomial up = m;
      ++up.exp[v];
      corner = divisible_by_any(up, lts);
    }
    if (corner) corners.push_back(m);
  }
  return corners;
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, const ModuleOrder& order) {
  if (gens.empty()) return {};
  const RingDescriptor& ring = gens.front().ring();
  if (!is_elimination_for(order.base(), ring)) {
    throw DomainError("ordering " + order.base().name() + " is not an elimination ordering");
  }
  const auto G = buchberger(gens, order);
  std::vector<Poly> out;
  for (const auto& g : G.elements) {
    const bool t_only = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term<Rational>& t) {
      for (int i = 0; i < ring.x_count(); ++i) {
        if (t.mono.exp[i] != 0) return false;
      }
      return true;
    });
    if (t_only) out.push_back(g);
  }
  return out;
}

}  // namespace noeth
