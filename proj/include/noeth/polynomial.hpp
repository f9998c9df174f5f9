#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "noeth/error.hpp"
#include "noeth/order.hpp"
#include "noeth/rational.hpp"
#include "noeth/ring.hpp"

namespace noeth {

template <class C>
struct Term {
  Monomial mono;
  C coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial (or module vector when the ring has rank > 1) with
/// coefficients in the field C. Terms are kept strictly descending under
/// the attached ModuleOrder with no zero coefficients, so two polynomials
/// are equal iff their term sequences are equal.
template <class C>
class Polynomial {
public:
  Polynomial(RingPtr ring, ModuleOrder order) : ring_(std::move(ring)), order_(order) {}

  static Polynomial from_terms(RingPtr ring, ModuleOrder order, std::vector<Term<C>> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  static Polynomial monomial(RingPtr ring, ModuleOrder order, Monomial mono, C coeff) {
    std::vector<Term<C>> terms;
    terms.push_back({std::move(mono), std::move(coeff)});
    return from_terms(std::move(ring), order, std::move(terms));
  }

  const RingDescriptor& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Term<C>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term<C>& leading() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_.front();
  }
  const Term<C>& smallest() const {
    if (terms_.empty()) throw DomainError("smallest term of the zero polynomial");
    return terms_.back();
  }

  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_constant() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term<C>& t) {
      return t.mono.pos == 0 && total_degree(t.mono.exp) == 0;
    });
  }

  Polynomial without_leading() const {
    Polynomial p = *this;
    if (!p.terms_.empty()) p.terms_.erase(p.terms_.begin());
    return p;
  }

  /// Coefficient of `mono`, or nullopt when absent.
  std::optional<C> coefficient(const Monomial& mono) const {
    for (const auto& t : terms_) {
      if (t.mono == mono) return t.coeff;
    }
    return std::nullopt;
  }

  Polynomial with_order(const ModuleOrder& order) const {
    if (order == order_) return *this;
    return from_terms(ring_, order, terms_);
  }

  Polynomial with_ring(RingPtr ring) const {
    Polynomial p = *this;
    p.ring_ = std::move(ring);
    return p;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.require_same_ring(g);
    return f.merge(g.with_order(f.order_), false);
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    f.require_same_ring(g);
    return f.merge(g.with_order(f.order_), true);
  }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (!f.ring_->same_variables(*g.ring_)) throw DomainError("ring mismatch");
    if (f.ring_->rank() > 1 && g.ring_->rank() > 1) {
      throw DomainError("cannot multiply two module elements");
    }
    const RingPtr& ring = f.ring_->rank() > 1 ? f.ring_ : g.ring_;
    std::vector<Term<C>> out;
    out.reserve(f.size() * g.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) {
        Monomial m{a.mono.pos + b.mono.pos, a.mono.exp};
        for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += b.mono.exp[i];
        out.push_back({std::move(m), a.coeff * b.coeff});
      }
    }
    return from_terms(ring, f.order_, std::move(out));
  }

  Polynomial scaled(const C& c) const {
    if (coeff_is_zero(c)) return Polynomial(ring_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = t.coeff * c;
    return p;
  }

  /// c * x^shift * this. Multiplying by a power product preserves the order.
  Polynomial mul_term(const C& c, const Exponents& shift) const {
    if (coeff_is_zero(c)) return Polynomial(ring_, order_);
    Polynomial p = *this;
    for (auto& t : p.terms_) {
      for (std::size_t i = 0; i < shift.size(); ++i) t.mono.exp[i] += shift[i];
      t.coeff = t.coeff * c;
    }
    return p;
  }

  /// this - c * x^shift * g, computed by a single sorted merge.
  Polynomial sub_mul_term(const C& c, const Exponents& shift, const Polynomial& g) const {
    return merge(g.with_order(order_).mul_term(c, shift), true);
  }

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.ring_->same_variables(*g.ring_) && f.ring_->rank() == g.ring_->rank() &&
           f.terms_ == g.terms_;
  }

private:
  void require_same_ring(const Polynomial& g) const {
    if (ring_ != g.ring_ && !(*ring_ == *g.ring_)) throw DomainError("ring mismatch");
  }

  void canonicalize() {
    for (const auto& t : terms_) {
      if (static_cast<int>(t.mono.exp.size()) != ring_->nvars()) {
        throw DomainError("exponent vector length does not match the ring");
      }
      if (t.mono.pos < 0 || t.mono.pos >= ring_->rank()) {
        throw DomainError("term position outside the module rank");
      }
    }
    std::sort(terms_.begin(), terms_.end(), [this](const Term<C>& a, const Term<C>& b) {
      return order_.compare(a.mono, b.mono) > 0;
    });
    std::vector<Term<C>> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coeff = merged.back().coeff + t.coeff;
      } else {
        if (!merged.empty() && coeff_is_zero(merged.back().coeff)) merged.pop_back();
        merged.push_back(std::move(t));
      }
    }
    if (!merged.empty() && coeff_is_zero(merged.back().coeff)) merged.pop_back();
    terms_ = std::move(merged);
  }

  Polynomial merge(const Polynomial& g, bool subtract) const {
    Polynomial out(ring_, order_);
    out.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
        continue;
      }
      if (i == terms_.size()) {
        const auto& b = g.terms_[j++];
        out.terms_.push_back({b.mono, subtract ? C(-b.coeff) : b.coeff});
        continue;
      }
      auto c = order_.compare(terms_[i].mono, g.terms_[j].mono);
      if (c > 0) {
        out.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& b = g.terms_[j++];
        out.terms_.push_back({b.mono, subtract ? C(-b.coeff) : b.coeff});
      } else {
        C sum = subtract ? C(terms_[i].coeff - g.terms_[j].coeff) : C(terms_[i].coeff + g.terms_[j].coeff);
        if (!coeff_is_zero(sum)) out.terms_.push_back({terms_[i].mono, std::move(sum)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  RingPtr ring_;
  ModuleOrder order_;
  std::vector<Term<C>> terms_;
};

using Poly = Polynomial<Rational>;

template <class C>
Polynomial<C> poly_add(const Polynomial<C>& f, const Polynomial<C>& g) {
  return f + g;
}

template <class C>
Polynomial<C> poly_mul(const Polynomial<C>& f, const Polynomial<C>& g) {
  return f * g;
}

/// The σ-maximal term of f under `ord` (which need not be f's own order).
template <class C>
Term<C> leading_term(const ModuleOrder& ord, const Polynomial<C>& f) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Term<C>* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (ord.compare(t.mono, best->mono) > 0) best = &t;
  }
  return *best;
}

/// The σ-minimal term of f under `ord`, coefficient included.
template <class C>
Term<C> smallest_term(const ModuleOrder& ord, const Polynomial<C>& f) {
  if (f.is_zero()) throw DomainError("smallest term of the zero polynomial");
  const Term<C>* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (ord.compare(t.mono, best->mono) < 0) best = &t;
  }
  return *best;
}

/// f(v + point): every variable v_i is replaced by v_i + point_i.
Poly substitute_affine(const Poly& f, const std::vector<Rational>& point);

/// Value of f at `point`, one entry per module position.
std::vector<Rational> evaluate(const Poly& f, const std::vector<Rational>& point);

/// Polynomial in `ring` with a single term c * x^exp * e_pos.
Poly make_monomial(RingPtr ring, ModuleOrder order, Exponents exp, Rational c = 1, int pos = 0);
Poly make_constant(RingPtr ring, ModuleOrder order, const Rational& c);

}  // namespace noeth
