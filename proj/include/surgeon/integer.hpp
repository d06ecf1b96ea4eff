#pragma once

#include <gmpxx.h>

#include <string>

namespace surgeon {

// Every exact quantity (linking numbers, slope terms, matrix entries,
// polynomial coefficients) is an arbitrary-precision integer.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer abs(const Integer& a) {
  Integer r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline int sign(const Integer& a) { return sgn(a); }

// Floor division with a nonzero divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Integer& d, const Integer& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace surgeon
