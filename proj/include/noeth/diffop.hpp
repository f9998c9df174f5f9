#pragma once

#include <map>
#include <vector>

#include "noeth/linalg.hpp"
#include "noeth/polynomial.hpp"

namespace noeth {

/// Constant-coefficient differential operator sum c_{k,a} D(a) acting on
/// the k-th component, with D(a) = (1/a!) d^a.  Keys are Monomials whose
/// exponent runs over the x-block only.
template <class C>
struct DiffOp {
  RingPtr ring;
  std::map<Monomial, C> terms;
  std::vector<Rational> center;  // over the x-block; empty means the origin

  DiffOp() = default;
  explicit DiffOp(RingPtr r, std::vector<Rational> c = {}) : ring(std::move(r)), center(std::move(c)) {}

  /// `one` carries the coefficient field's unit (and its ring, for Q(t)).
  static DiffOp identity(RingPtr r, const C& one, int pos = 0, std::vector<Rational> c = {}) {
    DiffOp L(r, std::move(c));
    L.terms.emplace(Monomial{pos, Exponents(static_cast<std::size_t>(r->x_count()), 0)}, one);
    return L;
  }

  bool is_zero() const { return terms.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [k, c] : terms) d = std::max(d, k.degree());
    return d;
  }

  C coefficient(const Monomial& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? C() : it->second;
  }

  void add(const Monomial& key, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = terms.emplace(key, c);
    if (fresh) return;
    it->second = it->second + c;
    if (coeff_is_zero(it->second)) terms.erase(it);
  }

  DiffOp scaled(const C& c) const {
    DiffOp out(ring, center);
    if (coeff_is_zero(c)) return out;
    for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
    return out;
  }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp out = a;
    if (!out.ring) out.ring = b.ring;
    for (const auto& [k, v] : b.terms) out.add(k, v);
    return out;
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    DiffOp out = a;
    if (!out.ring) out.ring = b.ring;
    for (const auto& [k, v] : b.terms) out.add(k, C(-v));
    return out;
  }
  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.terms == b.terms && a.center == b.center;
  }
};

/// Decrements the j-th exponent, dropping terms where it is zero.
template <class C>
DiffOp<C> sigma(const DiffOp<C>& L, int j) {
  DiffOp<C> out(L.ring, L.center);
  for (const auto& [k, v] : L.terms) {
    if (k.exp[static_cast<std::size_t>(j)] == 0) continue;
    Monomial m = k;
    --m.exp[static_cast<std::size_t>(j)];
    out.terms.emplace(std::move(m), v);
  }
  return out;
}

template <class C>
DiffOp<C> rho(const DiffOp<C>& L, int j) {
  DiffOp<C> out(L.ring, L.center);
  for (const auto& [k, v] : L.terms) {
    Monomial m = k;
    ++m.exp[static_cast<std::size_t>(j)];
    out.terms.emplace(std::move(m), v);
  }
  return out;
}

/// The order operator keys are compared with: the x-part of `order`.
inline ModuleOrder key_order(const ModuleOrder& order) {
  return ModuleOrder(order.base().x_part(), order.precedence());
}

/// Largest key under `order` (already restricted to the x-block); L must
/// be nonzero.
template <class C>
Monomial max_key(const DiffOp<C>& L, const ModuleOrder& order) {
  const Monomial* best = nullptr;
  for (const auto& [k, v] : L.terms) {
    if (best == nullptr || order.compare(k, *best) > 0) best = &k;
  }
  if (best == nullptr) throw DomainError("zero operator has no leading term");
  return *best;
}

/// Incremental echelon form of a span of operators.  Rows are kept in
/// insertion order and each row is free of the pivots of earlier rows.
template <class C>
class SpanBuilder {
public:
  DiffOp<C> reduce(DiffOp<C> L) const {
    for (const auto& [piv, row] : rows_) {
      auto it = L.terms.find(piv);
      if (it == L.terms.end()) continue;
      const C c = it->second;
      for (const auto& [k, v] : row.terms) L.add(k, C(-(c * v)));
    }
    return L;
  }

  bool contains(const DiffOp<C>& L) const { return reduce(L).is_zero(); }

  /// Adds L to the span; returns false if it was already there.
  bool insert(const DiffOp<C>& L) {
    DiffOp<C> r = reduce(L);
    if (r.is_zero()) return false;
    const Monomial piv = std::prev(r.terms.end())->first;
    const C inv = one_like(r.terms.rbegin()->second) / r.terms.rbegin()->second;
    rows_.emplace_back(piv, r.scaled(inv));
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

private:
  std::vector<std::pair<Monomial, DiffOp<C>>> rows_;
};

template <class C>
bool is_closed(const std::vector<DiffOp<C>>& ops) {
  if (ops.empty()) return true;
  SpanBuilder<C> span;
  for (const auto& L : ops) span.insert(L);
  const int n = ops.front().ring->x_count();
  for (const auto& L : ops) {
    for (int j = 0; j < n; ++j) {
      if (!span.contains(sigma(L, j))) return false;
    }
  }
  return true;
}

/// Independent members of `ops` followed by the σ-images needed to make
/// the span closed.
template <class C>
std::vector<DiffOp<C>> closure(const std::vector<DiffOp<C>>& ops) {
  std::vector<DiffOp<C>> out;
  SpanBuilder<C> span;
  std::vector<DiffOp<C>> queue(ops.begin(), ops.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (!span.insert(queue[i])) continue;
    out.push_back(queue[i]);
    const int n = queue[i].ring->x_count();
    for (int j = 0; j < n; ++j) {
      DiffOp<C> s = sigma(queue[i], j);
      if (!s.is_zero()) queue.push_back(std::move(s));
    }
  }
  return out;
}

template <class C>
int span_dimension(const std::vector<DiffOp<C>>& ops) {
  SpanBuilder<C> span;
  for (const auto& L : ops) span.insert(L);
  return span.dimension();
}

template <class C>
bool same_span(const std::vector<DiffOp<C>>& a, const std::vector<DiffOp<C>>& b) {
  std::vector<DiffOp<C>> both(a);
  both.insert(both.end(), b.begin(), b.end());
  const int r = span_dimension(both);
  return r == span_dimension(a) && r == span_dimension(b);
}

/// Coefficient of x^a e_k in f, i.e. what D(a) reads off at the origin.
/// The t-block of f's monomials must be zero for the term to count.
template <class C>
C taylor_coefficient(const Polynomial<C>& f, const Monomial& key) {
  const auto nx = key.exp.size();
  C sum{};
  for (const auto& t : f.terms()) {
    if (t.mono.pos != key.pos) continue;
    if (!std::equal(key.exp.begin(), key.exp.end(), t.mono.exp.begin())) continue;
    bool t_free = true;
    for (std::size_t i = nx; i < t.mono.exp.size(); ++i) t_free = t_free && t.mono.exp[i] == 0;
    if (t_free) sum = sum + t.coeff;
  }
  return sum;
}

/// L(f) evaluated at L's center; for modules the components are summed.
Rational apply_at(const DiffOp<Rational>& L, const Poly& f);

/// a x^a e_k  ->  a D(a) on component k.
DiffOp<Rational> dual_of_polynomial(const Poly& g, std::vector<Rational> center = {});

}  // namespace noeth
