#pragma once

#include <string>

#include "noeth/polynomial.hpp"

namespace noeth {

/// Exact quotient a / b; throws DomainError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor over Q, normalized to leading coefficient 1
/// (gcd(0, 0) = 0). Multivariate inputs are handled by recursive
/// content / primitive-part decomposition with pseudo-remainder sequences.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Element of Q(t) as a reduced fraction num/den of polynomials over a
/// t-only ring ordered by DegLex; den is monic.
///
/// A default-constructed value is the zero of an unspecified ring; it
/// adopts the ring of whatever it is combined with.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(const Poly& num);
  RationalFunction(const Poly& num, const Poly& den);
  static RationalFunction constant(RingPtr t_ring, const Rational& c);

  const Poly& num() const { return *num_; }
  const Poly& den() const { return *den_; }
  bool has_ring() const { return num_.has_value(); }
  RingPtr ring_ptr() const { return num_ ? num_->ring_ptr() : nullptr; }

  bool is_zero() const { return !num_ || num_->is_zero(); }
  bool is_polynomial() const { return !num_ || den_->is_constant(); }
  bool is_constant() const { return !num_ || (num_->is_constant() && den_->is_constant()); }
  /// Constant value; requires is_constant().
  Rational constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c);

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  /// Value at a t-point; throws DomainError when the denominator vanishes.
  Rational evaluate(const std::vector<Rational>& point) const;

private:
  std::optional<Poly> num_;
  std::optional<Poly> den_;
};

/// Canonical fraction num/den; throws DomainError when den = 0.
RationalFunction ratfun_normalize(const Poly& num, const Poly& den);

inline bool is_zero(const RationalFunction& c) { return c.is_zero(); }
RationalFunction one_like(const RationalFunction& c);

/// The DegLex order used for every t-only polynomial.
ModuleOrder t_order();

}  // namespace noeth
