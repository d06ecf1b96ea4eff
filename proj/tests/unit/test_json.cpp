#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "surgeon/error.hpp"
#include "surgeon/family.hpp"
#include "surgeon/json_io.hpp"

using namespace surgeon;

TEST_CASE("integers switch to strings past a machine word") {
  CHECK(integer_json(Integer(-7)) == Json(-7));
  const Integer big("123456789012345678901234567890");
  CHECK(integer_json(big).is_string());
  CHECK(integer_from_json(integer_json(big)) == big);
  CHECK(integer_from_json(Json("-5")) == -5);
  CHECK_THROWS(integer_from_json(Json(1.5)));
}

TEST_CASE("slopes") {
  CHECK(slope_json(Slope()).is_null());
  CHECK(slope_json(Slope(-1, 0)) == Json::parse("[1,0]"));
  CHECK(slope_json(Slope(4, -6)) == Json::parse("[-2,3]"));
  for (const Slope& s : {Slope(), Slope(0, 1), Slope(1, 0), Slope(-7, 3)}) CHECK(slope_from_json(slope_json(s)) == s);
}

TEST_CASE("abstract presentations round trip") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const SurgeryPresentation p = oracle::random_presentation(rng);
    const Json j = presentation_json(p);
    CHECK(presentation_from_json(j) == p);
    CHECK(presentation_from_json(Json::parse(j.dump())) == p);
  }
}

TEST_CASE("diagram presentations round trip and are checked on load") {
  const SurgeryPresentation base = default_asset().base;
  const Json j = presentation_json(base);
  CHECK(j.contains("pd"));
  const SurgeryPresentation back = presentation_from_json(j);
  CHECK(back == base);
  CHECK(back.twist_regions().size() == base.twist_regions().size());
  Json bad = j;
  bad["linking"][0][3] = 5;
  bad["linking"][3][0] = 5;
  CHECK_THROWS_AS(presentation_from_json(bad), ValidationError);
}

TEST_CASE("assets round trip") {
  const FamilyAsset a = default_asset();
  const FamilyAsset b = asset_from_json(asset_json(a));
  CHECK(asset_json(b) == asset_json(a));
  CHECK(b.p_orientation.s1 == a.p_orientation.s1);
  CHECK(b.p_orientation.s2 == a.p_orientation.s2);
  CHECK(b.provenance == a.provenance);
}

TEST_CASE("reports carry the groups and both traces") {
  const TwistFamily f(default_asset());
  const Json r = report_json(f.same_surgery_evidence(2, 0, 1));
  CHECK(r["h1_match"] == true);
  CHECK(r["groups"][0]["text"] == "Z/2");
  CHECK(r["traces"][0].size() == 3);
  CHECK(r["traces"][0][0]["move"].is_null());
}
