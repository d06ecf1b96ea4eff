#include "surgeon/laurent.hpp"

#include <sstream>
#include <utility>

#include "surgeon/error.hpp"

namespace surgeon {

void LaurentPoly::set(long e, const Integer& c) {
  if (c == 0)
    coeffs_.erase(e);
  else
    coeffs_[e] = c;
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly p;
  p.set(exponent, c);
  return p;
}

Integer LaurentPoly::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

Integer LaurentPoly::evaluate(const Integer& t) const {
  if (t != 1 && t != -1 && !is_zero() && min_exponent() < 0)
    throw PreconditionError("negative exponents can only be evaluated at +-1");
  Integer sum = 0;
  for (const auto& [e, c] : coeffs_) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    sum += c * power;
  }
  return sum;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& [e, c] : coeffs_) g = surgeon::gcd(g, c);
  return g;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

bool LaurentPoly::is_palindromic() const {
  if (is_zero()) return true;
  const long lo = min_exponent(), hi = max_exponent();
  for (const auto& [e, c] : coeffs_)
    if (coefficient(lo + hi - e) != c) return false;
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.coeffs_) r.set(e, r.coefficient(e) + c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<long, Integer> acc;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) acc[ea + eb] += ca * cb;
  LaurentPoly r;
  for (const auto& [e, c] : acc) r.set(e, c);
  return r;
}

LaurentPoly LaurentPoly::divided_by(const Integer& c) const {
  if (c == 0) throw PreconditionError("division by zero");
  LaurentPoly r;
  for (const auto& [e, v] : coeffs_) {
    if (!divides(c, v)) throw PreconditionError("inexact coefficient division");
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    r.coeffs_[e] = q;
  }
  return r;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  LaurentPoly rem = a, quot;
  const long bhi = b.max_exponent(), blo = b.min_exponent();
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < bhi - blo)
      throw PreconditionError("polynomial division is not exact");
    const Integer& lc = rem.leading();
    if (!divides(b.leading(), lc)) throw PreconditionError("polynomial division is not exact");
    Integer q;
    mpz_divexact(q.get_mpz_t(), lc.get_mpz_t(), b.leading().get_mpz_t());
    LaurentPoly term = LaurentPoly::monomial(q, rem.max_exponent() - bhi);
    quot = quot + term;
    rem = rem - term * b;
  }
  return quot;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const long e = it->first;
    Integer c = it->second;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (e == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

namespace {

// Polynomial with min exponent 0 and unit content.
LaurentPoly primitive_part(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.min_exponent()).divided_by(p.content());
  return r.leading() < 0 ? -r : r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, both with min exponent 0.
LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
  const long db = b.max_exponent();
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.max_exponent() >= db) {
    const long shift = a.max_exponent() - db;
    LaurentPoly scaled = a * LaurentPoly(lb);
    a = scaled - LaurentPoly::monomial(a.leading(), shift) * b;
  }
  return a;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive_part(b) * LaurentPoly(b.is_zero() ? Integer(0) : b.content());
  if (b.is_zero()) return primitive_part(a) * LaurentPoly(a.content());
  const Integer c = surgeon::gcd(a.content(), b.content());
  LaurentPoly x = primitive_part(a), y = primitive_part(b);
  if (x.max_exponent() < y.max_exponent()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = pseudo_remainder(x, y);
    x = y;
    y = primitive_part(r);
  }
  return primitive_part(x) * LaurentPoly(c);
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const long span = p.max_exponent() - p.min_exponent();
  LaurentPoly r = p.shifted(-p.min_exponent() - span / 2);
  const Integer at_one = r.evaluate(1);
  if (at_one < 0 || (at_one == 0 && r.leading() < 0)) r = -r;
  return r;
}

}  // namespace surgeon
