#include <doctest.h>

#include <algorithm>

#include "support/oracles.hpp"
#include "surgeon/error.hpp"
#include "surgeon/family.hpp"
#include "surgeon/invariants.hpp"
#include "surgeon/morse.hpp"

using namespace surgeon;

namespace {

oracle::Poly to_poly(const LaurentPoly& p) {
  oracle::Poly r;
  for (const auto& [e, c] : p.coefficients()) r[e] = c.get_si();
  return r;
}

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kFiveTwo = "X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]";

}  // namespace

TEST_CASE("Laurent arithmetic") {
  const LaurentPoly t = LaurentPoly::t(), one(1);
  const LaurentPoly a = t * t - one;                  // t^2 - 1
  const LaurentPoly b = t - one;
  CHECK(exact_divide(a, b) == t + one);
  CHECK_THROWS_AS(exact_divide(a, t + t + one), PreconditionError);
  CHECK(gcd(a * LaurentPoly(6), (t + one) * (t - LaurentPoly(2)) * LaurentPoly(4)) == (t + one) * LaurentPoly(2));
  CHECK(normalize_symmetric(LaurentPoly::monomial(-1, 5) * (t * t - t + one)).to_string() == "t - 1 + t^-1");
  CHECK(normalize_symmetric(LaurentPoly::monomial(2, -3) * (LaurentPoly(2) * t * t - LaurentPoly(3) * t + LaurentPoly(2)))
            .to_string() == "4*t - 6 + 4*t^-1");
  CHECK((t - t).is_zero());
  CHECK(LaurentPoly::t(-2).evaluate(-1) == 1);
  CHECK_THROWS_AS(LaurentPoly::t(-1).evaluate(2), PreconditionError);
}

TEST_CASE("Wirtinger presentations") {
  const GroupPresentation u = wirtinger(parse_pd("U[1]"));
  CHECK(u.generators.size() == 1);
  CHECK(u.relators.empty());
  const GroupPresentation t = wirtinger(parse_pd(kTrefoil));
  CHECK(t.generators.size() == 3);
  CHECK(t.relators.size() == 3);
  for (const auto& r : t.relators) CHECK(r.size() == 4);
  CHECK_THROWS_AS(wirtinger(closed_braid(std::vector<int>{1, 1}, 2)), PreconditionError);
}

TEST_CASE("Fox Jacobian of the trefoil by hand") {
  // Each trefoil crossing meets three distinct arcs, so the row of
  // x_o^e x_a x_o^-e x_b^-1 holds exactly 1 - t^e, t^e and -1.
  const LinkDiagram d = parse_pd(kTrefoil);
  const auto jac = fox_jacobian(wirtinger(d));
  REQUIRE(jac.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    const long e = d.crossings()[r].sign;
    std::vector<std::string> cells;
    for (const auto& c : jac[r])
      if (!c.is_zero()) cells.push_back(c.to_string());
    std::sort(cells.begin(), cells.end());
    std::vector<std::string> want = {(LaurentPoly(1) - LaurentPoly::t(e)).to_string(), LaurentPoly::t(e).to_string(),
                                     "-1"};
    std::sort(want.begin(), want.end());
    CHECK(cells == want);
  }
}

TEST_CASE("Alexander polynomials against the hand Fox oracle") {
  const std::pair<const char*, const char*> cases[] = {
      {"U[1]", "1"}, {kTrefoil, "t - 1 + t^-1"}, {kFigureEight, "-t + 3 - t^-1"}, {kFiveTwo, "2*t - 3 + 2*t^-1"}};
  for (const auto& [pd, text] : cases) {
    const LinkDiagram d = parse_pd(pd);
    const LaurentPoly delta = alexander_polynomial(d);
    CHECK(delta.to_string() == text);
    CHECK(to_poly(delta) == oracle::fox_alexander(d));
    CHECK(knot_determinant(d) == oracle::coloring_determinant(d));
  }
  CHECK(knot_determinant(parse_pd(kFigureEight)) == 5);
  CHECK(knot_determinant(parse_pd(kFiveTwo)) == 7);
}

TEST_CASE("Alexander polynomial of braid closures and mirrors") {
  const LinkDiagram right = closed_braid(std::vector<int>{1, 1, 1}, 2);
  const LinkDiagram left = closed_braid(std::vector<int>{-1, -1, -1}, 2);
  CHECK(alexander_polynomial(right) == alexander_polynomial(left));
  const LinkDiagram t52 = closed_braid(std::vector<int>{1, 1, 1, 1, 1}, 2);  // (2,5) torus knot
  CHECK(alexander_polynomial(t52).to_string() == "t^2 - t + 1 - t^-1 + t^-2");
  CHECK(to_poly(alexander_polynomial(t52)) == oracle::fox_alexander(t52));
}

TEST_CASE("twists away from the knot leave its polynomial alone") {
  const FamilyAsset a = default_asset();
  const LinkDiagram& d = *a.base.diagram();
  // The l2 disk meets only l3, so twisting there does not touch k.
  REQUIRE(geometric_intersection(d, a.annulus.inner, kKnot) == 0);
  const LinkDiagram k0 = delete_components(d, {kL1, kL2, kL3}).diagram;
  const LinkDiagram tw = insert_full_twists(d, a.annulus.inner, 3);
  const LinkDiagram k1 = delete_components(tw, {kL1, kL2, kL3}).diagram;
  CHECK(alexander_polynomial(k0) == alexander_polynomial(k1));
}

TEST_CASE("family knots satisfy the Alexander polynomial constraints") {
  const TwistFamily fam(default_asset());
  for (int m = 0; m <= 2; ++m)
    for (int n = -1; n <= 2; ++n) {
      const LinkDiagram d = fam.knot_diagram(m, n).diagram;
      const LaurentPoly delta = alexander_polynomial(d);
      CHECK(abs(delta.evaluate(1)) == 1);
      CHECK(delta.is_palindromic());
      CHECK(knot_determinant(d) % 2 == 1);
      CHECK(knot_determinant(d) == oracle::coloring_determinant(d));
    }
}
