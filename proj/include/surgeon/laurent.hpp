#pragma once

#include <map>
#include <string>

#include "surgeon/integer.hpp"

namespace surgeon {

// Integer Laurent polynomial in one variable t. Zero coefficients are never
// stored, so the zero polynomial has an empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Integer& c) { set(0, c); }  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const Integer& c, long exponent);
  // t^exponent with coefficient 1.
  static LaurentPoly t(long exponent = 1) { return monomial(1, exponent); }

  const std::map<long, Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(long exponent) const;
  bool is_zero() const { return coeffs_.empty(); }
  // Only meaningful when nonzero.
  long min_exponent() const { return coeffs_.begin()->first; }
  long max_exponent() const { return coeffs_.rbegin()->first; }
  const Integer& leading() const { return coeffs_.rbegin()->second; }

  Integer evaluate(const Integer& t) const;  // t must be +1 or -1 when exponents are negative
  Integer content() const;                   // gcd of coefficients, 0 for the zero polynomial
  LaurentPoly shifted(long k) const;         // multiply by t^k
  bool is_palindromic() const;               // coefficients read the same both ways

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Exact division: throws PreconditionError when b does not divide a in
  // Z[t, 1/t].
  friend LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);
  // Divides every coefficient by c exactly.
  LaurentPoly divided_by(const Integer& c) const;

  // "t - 1 + t^-1", "-t^2 + 3", "0".
  std::string to_string() const;

 private:
  void set(long e, const Integer& c);
  std::map<long, Integer> coeffs_;
};

// Greatest common divisor in Z[t, 1/t], up to units. The result has
// nonnegative exponents starting at 0 and a positive leading coefficient.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

// Unit normalization for Alexander polynomials: multiply by +-t^k so the
// exponents are symmetric about 0 (or span [0, 1] style ranges as evenly as
// possible) and the value at t = 1 is positive; when that value is 0 the
// leading coefficient is made positive instead.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

}  // namespace surgeon
