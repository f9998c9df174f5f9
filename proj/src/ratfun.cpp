#include "noeth/ratfun.hpp"

namespace noeth {

namespace {

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.leading().coeff);
}

int degree_in(const Poly& p, int v) {
  int d = -1;
  for (const auto& t : p.terms()) d = std::max(d, t.mono.exp[v]);
  return d;
}

/// Coefficient of v^d, as a polynomial free of v.
Poly coefficient_in(const Poly& p, int v, int d) {
  std::vector<Term<Rational>> out;
  for (const auto& t : p.terms()) {
    if (t.mono.exp[v] != d) continue;
    Term<Rational> c = t;
    c.mono.exp[v] = 0;
    out.push_back(std::move(c));
  }
  return Poly::from_terms(p.ring_ptr(), p.order(), std::move(out));
}

Poly content_in(const Poly& p, int v) {
  Poly g(p.ring_ptr(), p.order());
  for (int d = degree_in(p, v); d >= 0; --d) {
    Poly c = coefficient_in(p, v, d);
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, int v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, v));
}

/// Sparse pseudo-remainder of a by b with respect to v.
Poly pseudo_remainder(Poly a, const Poly& b, int v) {
  const int db = degree_in(b, v);
  const Poly lb = coefficient_in(b, v, db);
  int da = degree_in(a, v);
  while (!a.is_zero() && da >= db) {
    Poly la = coefficient_in(a, v, da);
    Exponents shift(static_cast<std::size_t>(a.ring().nvars()), 0);
    shift[v] = da - db;
    a = lb * a - (la * b).mul_term(Rational(1), shift);
    da = degree_in(a, v);
  }
  return a;
}

int first_variable(const Poly& a, const Poly& b) {
  int v = a.ring().nvars();
  for (const Poly* p : {&a, &b}) {
    for (const auto& t : p->terms()) {
      for (int i = 0; i < v; ++i) {
        if (t.mono.exp[i] > 0) {
          v = i;
          break;
        }
      }
    }
  }
  return v;
}

}  // namespace

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  Poly rem = a;
  Poly quo(a.ring_ptr(), a.order());
  const auto& lb = b.leading();
  while (!rem.is_zero()) {
    const auto& lr = rem.leading();
    if (!lb.mono.divides(lr.mono)) throw DomainError("inexact polynomial division");
    Exponents shift = lb.mono.quotient_of(lr.mono);
    Rational c = lr.coeff / lb.coeff;
    quo = quo + make_monomial(a.ring_ptr(), a.order(), shift, c);
    rem = rem.sub_mul_term(c, shift, b);
  }
  return quo;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return make_constant(a.ring_ptr(), a.order(), 1);
  const int v = first_variable(a, b);
  if (degree_in(b, v) <= 0) return poly_gcd(content_in(a, v), b);
  if (degree_in(a, v) <= 0) return poly_gcd(a, content_in(b, v));

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly c = poly_gcd(ca, cb);
  Poly p = divide_exact(a, ca);
  Poly q = divide_exact(b, cb);
  if (degree_in(p, v) < degree_in(q, v)) std::swap(p, q);

  Poly g(a.ring_ptr(), a.order());
  while (true) {
    Poly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (degree_in(r, v) == 0) {
      g = make_constant(a.ring_ptr(), a.order(), 1);
      break;
    }
    p = std::move(q);
    q = primitive_part(r, v);
  }
  return monic(c * primitive_part(g, v));
}

ModuleOrder t_order() { return ModuleOrder(TermOrder::deglex()); }

RationalFunction::RationalFunction(const Poly& num)
    : RationalFunction(num, make_constant(num.ring_ptr(), t_order(), 1)) {}

RationalFunction::RationalFunction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (!num.ring().same_variables(den.ring())) throw DomainError("ring mismatch");
  const Poly n = num.with_order(t_order());
  const Poly d = den.with_order(t_order());
  if (n.is_zero()) {
    num_ = n;
    den_ = make_constant(num.ring_ptr(), t_order(), 1);
    return;
  }
  Poly g = poly_gcd(n, d);
  Poly rn = divide_exact(n, g);
  Poly rd = divide_exact(d, g);
  Rational lc = rd.leading().coeff;
  num_ = rn.scaled(Rational(1) / lc);
  den_ = rd.scaled(Rational(1) / lc);
}

RationalFunction RationalFunction::constant(RingPtr t_ring, const Rational& c) {
  return RationalFunction(make_constant(std::move(t_ring), t_order(), c));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw DomainError("rational function is not constant");
  if (is_zero()) return 0;
  return num_->leading().coeff / den_->leading().coeff;
}

RationalFunction ratfun_normalize(const Poly& num, const Poly& den) {
  return RationalFunction(num, den);
}

RationalFunction one_like(const RationalFunction& c) {
  if (!c.has_ring()) throw DomainError("rational function without a ring");
  return RationalFunction::constant(c.ring_ptr(), 1);
}

namespace {

// Brings a ring-less zero into the ring of `other`.
const RationalFunction& lift(const RationalFunction& a, const RationalFunction& other,
                             RationalFunction& storage) {
  if (a.has_ring() || !other.has_ring()) return a;
  storage = RationalFunction::constant(other.ring_ptr(), 0);
  return storage;
}

}  // namespace

RationalFunction RationalFunction::operator-() const {
  if (!num_) return *this;
  RationalFunction r = *this;
  r.num_ = -*num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a0, const RationalFunction& b0) {
  RationalFunction sa, sb;
  const auto& a = lift(a0, b0, sa);
  const auto& b = lift(b0, a0, sb);
  if (!a.has_ring()) return a;
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den() == b.den()) return RationalFunction(a.num() + b.num(), a.den());
  return RationalFunction(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a0, const RationalFunction& b0) {
  RationalFunction sa, sb;
  const auto& a = lift(a0, b0, sa);
  const auto& b = lift(b0, a0, sb);
  if (!a.has_ring()) return a;
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  return RationalFunction(a.num() * b.num(), a.den() * b.den());
}

RationalFunction operator/(const RationalFunction& a0, const RationalFunction& b0) {
  if (b0.is_zero()) throw DomainError("division by zero rational function");
  RationalFunction sa;
  const auto& a = lift(a0, b0, sa);
  if (a.is_zero()) return a;
  return RationalFunction(a.num() * b0.den(), a.den() * b0.num());
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
  if (!a.has_ring() || is_zero(c)) return a.has_ring() ? RationalFunction::constant(a.ring_ptr(), 0) : a;
  RationalFunction r = a;
  r.num_ = a.num_->scaled(c);
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.num() == b.num() && a.den() == b.den();
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  if (is_zero()) return 0;
  Rational d = noeth::evaluate(*den_, point)[0];
  if (noeth::is_zero(d)) throw DomainError("denominator vanishes at the evaluation point");
  return noeth::evaluate(*num_, point)[0] / d;
}

}  // namespace noeth
