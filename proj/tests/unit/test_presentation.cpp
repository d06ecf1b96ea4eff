#include <doctest.h>

#include "support/oracles.hpp"
#include "surgeon/error.hpp"
#include "surgeon/morse.hpp"
#include "surgeon/presentation.hpp"

using namespace surgeon;

namespace {

SurgeryPresentation hopf(Slope a, Slope b) {
  return SurgeryPresentation::from_linking({{0, 1}, {1, 0}}, {a, b}, {true, true});
}

bool same_data(const SurgeryPresentation& a, const SurgeryPresentation& b) {
  return a.slopes() == b.slopes() && a.linking() == b.linking();
}

}  // namespace

TEST_CASE("first homology of basic presentations") {
  CHECK(first_homology(SurgeryPresentation::from_linking({{0}}, {Slope(5, 1)})).to_string() == "Z/5");
  CHECK(first_homology(SurgeryPresentation::from_linking({{0}}, {Slope(0, 1)})).to_string() == "Z");
  CHECK(first_homology(SurgeryPresentation::from_linking({{0}}, {Slope(3, 7)})).to_string() == "Z/3");
  CHECK(first_homology(SurgeryPresentation::from_linking({{0}}, {Slope()})).to_string() == "Z");
  CHECK(first_homology(hopf(Slope(0, 1), Slope(0, 1))).trivial());
  CHECK(first_homology(hopf(Slope(2, 1), Slope(2, 1))).to_string() == "Z/3");
  CHECK(ambient_homology(hopf(Slope(), Slope(4, 1))).to_string() == "Z/4");
  CHECK(is_homology_sphere(SurgeryPresentation::from_linking({{0}}, {Slope(-1, 1)})));
}

TEST_CASE("Rolfsen twist formulas") {
  const SurgeryPresentation p = SurgeryPresentation::from_linking(
      {{0, 1, 2}, {1, 0, -1}, {2, -1, 0}}, {Slope(3, 2), Slope(-1, 4), Slope()}, {true, true, true});
  const SurgeryPresentation q = rolfsen_twist(p, 1, 2);
  CHECK(q.slope(1) == Slope(-1, 2));          // p/(q + t p)
  CHECK(q.slope(0) == Slope(3 + 2 * 2, 2));   // p + t q lk^2
  CHECK(q.slope(2).is_unfilled());
  CHECK(q.lk(0, 2) == 2 + 2 * 1 * -1);
  CHECK(q.lk(0, 1) == 1);
  CHECK(first_homology(q) == first_homology(p));
  CHECK_THROWS_AS(rolfsen_twist(p, 2, 1), PreconditionError);
  CHECK_THROWS_AS(rolfsen_twist(p.with_slopes({Slope(1, 1), Slope(1, 1), Slope()}), 5, 1), PreconditionError);
  const SurgeryPresentation knotted = SurgeryPresentation::from_linking({{0}}, {Slope(1, 1)}, {false});
  CHECK_THROWS_AS(rolfsen_twist(knotted, 0, 1), PreconditionError);
}

TEST_CASE("twists compose additively and inverse twists cancel") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const SurgeryPresentation p = oracle::random_presentation(rng);
    for (std::size_t c = 0; c < p.component_count(); ++c) {
      if (p.slope(c).is_unfilled()) continue;
      const long t1 = static_cast<long>(rng() % 9) - 4, t2 = static_cast<long>(rng() % 9) - 4;
      const SurgeryPresentation a = rolfsen_twist(rolfsen_twist(p, c, t1), c, t2);
      CHECK(same_data(a, rolfsen_twist(p, c, t1 + t2)));
      CHECK(same_data(rolfsen_twist(rolfsen_twist(p, c, t1), c, -t1), p));
      for (const Slope& s : a.slopes())
        if (!s.is_unfilled()) CHECK(gcd(s.p(), s.q()) == 1);
    }
  }
}

TEST_CASE("deleting meridional components") {
  const SurgeryPresentation one = SurgeryPresentation::from_linking({{0}}, {Slope::meridian()});
  CHECK(delete_meridional(one, 0).component_count() == 0);
  const SurgeryPresentation h = delete_meridional(hopf(Slope::meridian(), Slope(3, 5)), 0);
  CHECK(h.component_count() == 1);
  CHECK(h.slope(0) == Slope(3, 5));
  CHECK_THROWS_AS(delete_meridional(hopf(Slope(1, 1), Slope(3, 5)), 0), PreconditionError);
}

TEST_CASE("move scripts record traces and report the failing step") {
  const SurgeryPresentation p = hopf(Slope(-1, 2), Slope(5, 1));
  const ScriptResult empty = apply_move_script(p, {});
  CHECK(empty.trace.size() == 1);
  CHECK(empty.result == p);
  const ScriptResult back = apply_move_script(p, {Move::twist(0, 3), Move::twist(0, -3)});
  CHECK(back.result == p);
  CHECK(back.trace.size() == 3);
  // -1/2 twisted by 2 becomes -1/0.
  const ScriptResult gone = apply_move_script(p, {Move::twist(0, 2), Move::remove(0)});
  CHECK(gone.result.component_count() == 1);
  CHECK(gone.result.slope(0) == Slope(5 + 2, 1));
  try {
    apply_move_script(p, {Move::twist(0, 1), Move::remove(0)});
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("H1 is invariant under random moves (library against oracle)") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    SurgeryPresentation p = oracle::random_presentation(rng);
    const oracle::Group g0 = oracle::surgery_homology(p);
    const AbelianGroup lib = first_homology(p);
    CHECK(lib.free_rank == g0.free_rank);
    CHECK(lib.torsion == g0.torsion);
    for (int k = 0; k < 5; ++k) {
      std::size_t c = rng() % p.component_count();
      if (p.slope(c).is_unfilled()) continue;
      p = p.slope(c).is_meridional() ? delete_meridional(p, c) : rolfsen_twist(p, c, static_cast<long>(rng() % 5) - 2);
      if (p.component_count() == 0) break;
    }
    CHECK(oracle::surgery_homology(p) == g0);
  }
}

TEST_CASE("diagram-backed twists on a Hopf link") {
  // Hopf link whose second component spans a disk crossed once by the first.
  MorseBuilder b;
  b.cup(0, 0);
  b.cup(2, 1);
  const auto ref = b.edge_at(2);
  b.cross(1, true);
  auto region = b.horizontal(2, 1, 1, ref, 1);
  b.cross(1, true);
  b.cap(2).cap(0);
  b.add_region(region);
  const MorseBuilder::Result r = b.build("hopf");
  REQUIRE(linking_number(r.diagram, 0, 1) != 0);
  const SurgeryPresentation p = SurgeryPresentation::from_diagram(r.diagram, {Slope(2, 1), Slope(-1, 1)}, r.regions);
  const SurgeryPresentation q = rolfsen_twist(p, 1, 1);
  CHECK(q.slope(1).is_meridional());
  CHECK(q.slope(0) == Slope(3, 1));
  REQUIRE(q.diagram().has_value());
  CHECK(first_homology(q) == first_homology(p));
  const SurgeryPresentation k = delete_meridional(q, 1);
  CHECK(k.diagram()->component_count() == 1);
  CHECK(first_homology(k).to_string() == "Z/3");
}
