#include <doctest.h>

#include "support/oracles.hpp"
#include "surgeon/error.hpp"
#include "surgeon/family.hpp"
#include "surgeon/morse.hpp"

using namespace surgeon;

namespace {

LinkDiagram braid(std::vector<int> word, std::size_t strands) { return closed_braid(word, strands); }

}  // namespace

TEST_CASE("PD parsing of standard knots") {
  const LinkDiagram t = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]");
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 3);
  CHECK(writhe(t, 0) == -3);
  CHECK(serialize_pd(t) == "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const LinkDiagram u = parse_pd("U[7]");
  CHECK(u.component_count() == 1);
  CHECK(serialize_pd(u) == "U[1]");
  CHECK(parse_pd("").empty());
}

TEST_CASE("PD parse errors") {
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("Y[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,4,2,5]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,1,1,1]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1]"), ValidationError);
  CHECK_THROWS_AS(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3] U[3]"), ValidationError);
}

TEST_CASE("braid closures: writhe, linking and DT codes") {
  const LinkDiagram tref = braid({1, 1, 1}, 2);
  CHECK(tref.component_count() == 1);
  CHECK(writhe(tref, 0) == 3);
  CHECK(dt_export(tref) == "4 6 2");
  const LinkDiagram hopf = braid({1, 1}, 2);
  CHECK(hopf.component_count() == 2);
  CHECK(linking_number(hopf, 0, 1) == 1);
  CHECK(linking_number(braid({-1, -1}, 2), 0, 1) == -1);
  CHECK(linking_number(hopf.reversed(0), 0, 1) == -1);
  CHECK(hopf.reversed(1).reversed(1) == hopf);
  CHECK_THROWS_AS(dt_export(hopf), PreconditionError);
  CHECK(dt_export(braid({}, 1)) == "");
  const LinkDiagram fig8 = braid({1, -2, 1, -2}, 3);
  CHECK(writhe(fig8, 0) == 0);
  CHECK(fig8.crossing_count() == 4);
}

TEST_CASE("randomized PD round trips and linking recounts") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 2000; ++trial) {
    const LinkDiagram d = oracle::random_diagram(rng);
    const std::string text = serialize_pd(d);
    const LinkDiagram back = parse_pd(text);
    REQUIRE_MESSAGE(back == d.canonical(), text);
    CHECK(serialize_pd(back) == text);
    CHECK(d.canonical().canonical() == d.canonical());
    for (std::size_t i = 0; i < d.component_count(); ++i) {
      CHECK(writhe(back, i) == writhe(d.canonical(), i));
      for (std::size_t j = i + 1; j < d.component_count(); ++j)
        CHECK(linking_number(d, i, j) == oracle::recount_linking(d, i, j));
    }
  }
}

TEST_CASE("two-arc components that only pass over keep their orientation") {
  // An unknot lying over the other component and crossing it twice.
  MorseBuilder b;
  b.cup(0, 0).cup(2, 1);
  b.cross(1, true).cross(1, false);
  b.cap(2).cap(0);
  const LinkDiagram d = b.build().diagram;
  REQUIRE(d.component_count() == 2);
  for (std::size_t c = 0; c < 2; ++c) {
    const LinkDiagram r = c ? d.reversed(c) : d;
    CHECK(parse_pd(serialize_pd(r)) == r.canonical());
  }
}

TEST_CASE("full twists change writhe and linking as predicted") {
  const FamilyAsset a = default_asset();
  const LinkDiagram& d = *a.base.diagram();
  const TwistRegion& r = a.l3_region;
  for (long t : {-2, -1, 1, 3}) {
    const LinkDiagram tw = insert_full_twists(d, r, t);
    check_region(tw, r);
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == kL3) continue;
      const long alg = algebraic_intersection(d, r, i), geo = geometric_intersection(d, r, i);
      CHECK(writhe(tw, i) == writhe(d, i) + t * (alg * alg - geo));
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (j == kL3) continue;
        const long aj = algebraic_intersection(d, r, j);
        CHECK(oracle::recount_linking(tw, i, j) == linking_number(d, i, j) + t * alg * aj);
      }
      CHECK(linking_number(tw, i, kL3) == linking_number(d, i, kL3));
    }
  }
  CHECK(insert_full_twists(d, r, 0).canonical() == d.canonical());
}

TEST_CASE("component deletion carries regions") {
  const FamilyAsset a = default_asset();
  const LinkDiagram& d = *a.base.diagram();
  const DeletionResult del = delete_components(d, {kL1});
  CHECK(del.diagram.component_count() == 3);
  CHECK(del.component_map == std::vector<int>{0, -1, 1, 2});
  const auto r3 = remap_region(a.l3_region, d, del);
  REQUIRE(r3.has_value());
  CHECK(r3->anchor == 2);
  CHECK(algebraic_intersection(del.diagram, *r3, 0) == linking_number(del.diagram, 0, 2));
  CHECK_FALSE(remap_region(a.annulus.outer, d, del).has_value());
}
