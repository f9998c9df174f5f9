#pragma once

#include <gmpxx.h>

#include <string>

namespace noeth {

// GMP keeps every mpq_class result in lowest terms with a positive
// denominator, so equality is structural.
using Rational = mpq_class;

inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline Rational one_like(const Rational&) { return Rational(1); }

/// Zero test that finds overloads for other coefficient fields by ADL,
/// usable inside classes whose own is_zero() member would hide them.
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d" with optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& c) { return c.get_str(); }

inline Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

inline Rational binomial(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace noeth
