#include "noeth/diffop.hpp"

namespace noeth {

namespace {

void require_no_parameters(const RingDescriptor& ring) {
  if (ring.t_count() != 0) throw DomainError("operator evaluation with parameters needs the positive-dimensional path");
}

}  // namespace

Rational apply_at(const DiffOp<Rational>& L, const Poly& f) {
  if (f.is_zero()) return 0;
  require_no_parameters(f.ring());
  const Poly g = L.center.empty() ? f : substitute_affine(f, L.center);
  Rational sum = 0;
  for (const auto& [key, c] : L.terms) {
    if (auto v = g.coefficient(key)) sum += c * *v;
  }
  return sum;
}

DiffOp<Rational> dual_of_polynomial(const Poly& g, std::vector<Rational> center) {
  DiffOp<Rational> L(g.ring_ptr(), std::move(center));
  const auto nx = static_cast<std::size_t>(g.ring().x_count());
  for (const auto& t : g.terms()) {
    for (std::size_t i = nx; i < t.mono.exp.size(); ++i) {
      if (t.mono.exp[i] != 0) throw DomainError("dual of a polynomial involving parameters");
    }
    L.add(Monomial{t.mono.pos, Exponents(t.mono.exp.begin(), t.mono.exp.begin() + static_cast<long>(nx))}, t.coeff);
  }
  return L;
}

}  // namespace noeth
