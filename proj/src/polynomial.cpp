#include "noeth/polynomial.hpp"

namespace noeth {

Poly make_monomial(RingPtr ring, ModuleOrder order, Exponents exp, Rational c, int pos) {
  return Poly::monomial(std::move(ring), order, Monomial{pos, std::move(exp)}, std::move(c));
}

Poly make_constant(RingPtr ring, ModuleOrder order, const Rational& c) {
  Exponents zero(static_cast<std::size_t>(ring->nvars()), 0);
  return make_monomial(std::move(ring), order, std::move(zero), c);
}

Poly substitute_affine(const Poly& f, const std::vector<Rational>& point) {
  const int n = f.ring().nvars();
  if (static_cast<int>(point.size()) != n) throw DomainError("point length does not match the ring");
  std::vector<Term<Rational>> out;
  for (const auto& t : f.terms()) {
    // Expand prod_i (v_i + p_i)^{e_i} one variable at a time.
    std::vector<Term<Rational>> partial{{Monomial{t.mono.pos, Exponents(n, 0)}, t.coeff}};
    for (int i = 0; i < n; ++i) {
      const int e = t.mono.exp[i];
      if (e == 0) continue;
      std::vector<Term<Rational>> next;
      for (const auto& p : partial) {
        Rational power = 1;  // p_i^{e-k}, built from k = e downwards
        for (int k = e; k >= 0; --k) {
          if (k < e) power *= point[i];
          if (k < e && is_zero(point[i])) break;
          Monomial m = p.mono;
          m.exp[i] += k;
          next.push_back({std::move(m), p.coeff * binomial(e, k) * power});
        }
      }
      partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(std::move(p));
  }
  return Poly::from_terms(f.ring_ptr(), f.order(), std::move(out));
}

std::vector<Rational> evaluate(const Poly& f, const std::vector<Rational>& point) {
  const int n = f.ring().nvars();
  if (static_cast<int>(point.size()) != n) throw DomainError("point length does not match the ring");
  std::vector<Rational> value(static_cast<std::size_t>(f.ring().rank()), Rational(0));
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < t.mono.exp[i]; ++k) v *= point[i];
    }
    value[static_cast<std::size_t>(t.mono.pos)] += v;
  }
  return value;
}

}  // namespace noeth
