#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "surgeon/integer.hpp"

namespace surgeon {

// A surgery coefficient: a reduced rational p/q with q >= 0, the meridian
// 1/0, or Unfilled ("*"). Construction normalizes, so equal slopes compare
// equal field by field.
class Slope {
 public:
  // Unfilled.
  Slope() = default;
  // Throws PreconditionError for 0/0.
  Slope(Integer p, Integer q);

  static Slope unfilled() { return Slope(); }
  static Slope meridian() { return Slope(1, 0); }
  static Slope integer(const Integer& p) { return Slope(p, 1); }

  bool is_unfilled() const { return !filled_; }
  bool is_meridional() const { return filled_ && q_ == 0; }
  const Integer& p() const;
  const Integer& q() const;

  // "p/q", "1/0" or "*".
  std::string to_string() const;

  friend bool operator==(const Slope& a, const Slope& b) {
    if (a.filled_ != b.filled_) return false;
    return !a.filled_ || (a.p_ == b.p_ && a.q_ == b.q_);
  }

 private:
  bool filled_ = false;
  Integer p_ = 0, q_ = 0;
};

// Accepts "p/q", a bare integer "p" (meaning p/1) or "*".
Slope parse_slope(std::string_view text);

// An (a,b)-cable: a times along the companion, b times around its meridian.
struct Cable {
  Integer a, b;
};

// Validates gcd(|a|,|b|) = 1 and |a| >= 2.
Cable make_cable(const Integer& a, const Integer& b);
Cable parse_cable(std::string_view text);

// p/q surgery on the (a,b)-cable with |p - q a b| = 1 is p/(q a^2) surgery
// on the companion.
Slope cable_surgery_reduction(const Slope& s, const Cable& c);

}  // namespace surgeon
