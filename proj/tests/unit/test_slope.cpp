#include <doctest.h>

#include "surgeon/error.hpp"
#include "surgeon/slope.hpp"

using namespace surgeon;

TEST_CASE("slopes normalize sign and common factors") {
  CHECK(Slope(2, -4) == Slope(-1, 2));
  CHECK(Slope(-1, 0) == Slope::meridian());
  CHECK(Slope(0, -5) == Slope(0, 1));
  CHECK(Slope(6, 4).to_string() == "3/2");
  CHECK(Slope().to_string() == "*");
  CHECK_THROWS_AS(Slope(0, 0), PreconditionError);
  CHECK_THROWS_AS(Slope().p(), PreconditionError);
}

TEST_CASE("slope text grammar") {
  CHECK(parse_slope("-1/3") == Slope(-1, 3));
  CHECK(parse_slope(" 7 ") == Slope(7, 1));
  CHECK(parse_slope("*").is_unfilled());
  CHECK(parse_slope("1/0").is_meridional());
  CHECK(parse_slope("-1/0").is_meridional());
  CHECK(parse_slope("+2/-6") == Slope(-1, 3));
  CHECK_THROWS_AS(parse_slope("0/0"), ParseError);
  CHECK_THROWS_AS(parse_slope("1/x"), ParseError);
  CHECK_THROWS_AS(parse_slope(""), ParseError);
  CHECK(parse_slope("123456789012345678901234567890/11").p() == Integer("123456789012345678901234567890"));
}

TEST_CASE("cable reduction") {
  const Cable c = parse_cable("2,-1");
  CHECK(cable_surgery_reduction(parse_slope("-3/1"), c) == Slope(-3, 4));
  for (long m = 1; m <= 30; ++m) {
    const Slope out = cable_surgery_reduction(Slope(-1 - 2 * m, m), c);
    CHECK(out.q() == 4 * m);
    CHECK(gcd(abs(out.p()), out.q()) == 1);
  }
  CHECK_THROWS_AS(cable_surgery_reduction(Slope(0, 1), c), PreconditionError);
  CHECK_THROWS_AS(cable_surgery_reduction(Slope(), c), PreconditionError);
  CHECK_THROWS_AS(make_cable(1, 3), PreconditionError);
  CHECK_THROWS_AS(make_cable(4, 2), PreconditionError);
  CHECK_THROWS_AS(parse_cable("2"), ParseError);
}

TEST_CASE("cable reduction output is reduced whenever the precondition holds") {
  for (long a = 2; a <= 5; ++a)
    for (long b = -7; b <= 7; ++b) {
      if (gcd(Integer(a), Integer(b)) != 1) continue;
      const Cable c = make_cable(a, b);
      for (long q = 1; q <= 6; ++q)
        for (long e : {-1, 1}) {
          const Slope s(q * a * b + e, q);
          if (s.q() != q) continue;  // p/q not already reduced
          const Slope out = cable_surgery_reduction(s, c);
          CHECK(out.q() == q * a * a);
          CHECK(gcd(abs(out.p()), out.q()) == 1);
        }
    }
}
