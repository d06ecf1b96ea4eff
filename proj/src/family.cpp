#include "surgeon/family.hpp"

#include <sstream>

#include "surgeon/error.hpp"
#include "surgeon/morse.hpp"

namespace surgeon {

namespace {

const std::vector<std::string> kNames = {"k", "l1", "l2", "l3"};

ValidationItem item(std::string name, const std::string& expected, const std::string& observed, bool pass) {
  return {std::move(name), expected, observed, pass};
}

std::string str(const Integer& v) { return v.get_str(); }

void lk_l_items(const SurgeryPresentation& b, ValidationSheet& sheet) {
  const Integer& l12 = b.lk(kL1, kL2);
  const Integer& l13 = b.lk(kL1, kL3);
  const Integer& l23 = b.lk(kL2, kL3);
  sheet.items.push_back(item("lk(l1,l2)", "0", str(l12), l12 == 0));
  sheet.items.push_back(item("|lk(l1,l3)|", "1", str(abs(l13)), abs(l13) == 1));
  sheet.items.push_back(item("|lk(l2,l3)|", "1", str(abs(l23)), abs(l23) == 1));
  sheet.items.push_back(item("lk(l1,l3)*lk(l2,l3)", "1", str(l13 * l23), l13 * l23 == 1));
}

void region_items(const FamilyAsset& a, ValidationSheet& sheet) {
  const SurgeryPresentation& b = a.base;
  const bool anchors = a.annulus.outer.anchor == kL1 && a.annulus.inner.anchor == kL2 && a.l3_region.anchor == kL3;
  sheet.items.push_back(item("region anchors", "l1,l2,l3", anchors ? "l1,l2,l3" : "other", anchors));
  const bool flags = b.unknotted()[kL1] && b.unknotted()[kL2] && b.unknotted()[kL3];
  sheet.items.push_back(item("l1,l2,l3 unknotted", "yes", flags ? "yes" : "no", flags));
}

}  // namespace

bool ValidationSheet::passed() const {
  for (const ValidationItem& i : items)
    if (!i.pass) return false;
  return true;
}

std::string ValidationSheet::to_string() const {
  std::ostringstream out;
  for (const ValidationItem& i : items)
    out << (i.pass ? "ok   " : "FAIL ") << i.name << ": expected " << i.expected << ", observed " << i.observed << "\n";
  return out.str();
}

FamilyAsset make_asset(const LinkDiagram& diagram, const AnnulusRegion& annulus, const TwistRegion& l3_region,
                       POrientation orientation, std::string provenance) {
  if (diagram.component_count() != 4) throw ValidationError("the family link has 4 components");
  FamilyAsset a;
  a.base = SurgeryPresentation::from_diagram(diagram, std::vector<Slope>(4), {annulus.outer, annulus.inner, l3_region},
                                             kNames, "L");
  a.annulus = annulus;
  a.l3_region = l3_region;
  a.p_orientation = orientation;
  a.provenance = std::move(provenance);
  return a;
}

FamilyAsset default_asset() {
  enum { K = 0, L1 = 1, L2 = 2, L3 = 3 };
  MorseBuilder b;
  MorseBuilder::RegionSpec d3{{}, L3};
  b.cup(0, K);
  b.cup(1, L3);
  d3.reference = b.edge_at(2);
  d3.ref_factor = 1;
  b.cup(3, K);
  // [k l3 l3 k k k]: the left strand of k threads the l3 disk three times.
  b.cross(0, true);
  d3.edges.push_back({b.edge_at(1), -1});
  b.cross(1, false);
  b.cross(1, true);
  d3.edges.push_back({b.edge_at(1), +1});
  b.cross(0, false);
  b.cross(0, true);
  d3.edges.push_back({b.edge_at(1), -1});
  b.cross(1, false);
  // [l3 l3 k k k k]
  b.cup(0, L1);
  const auto l1_ref = b.edge_at(1);
  b.cross(1, true);
  d3.edges.push_back({b.edge_at(2), -1});
  b.cross(2, false);
  for (std::size_t p = 3; p <= 6; ++p) b.cross(p, false);
  // [l1 l3 l3 k k k k l1]: the l1 disk meets l3 once and k four times.
  auto d1 = b.horizontal(2, 5, L1, l1_ref, -1);
  b.cup(1, L2);
  const auto l2_ref = b.edge_at(2);
  b.cross(2, true);
  d3.edges.push_back({b.edge_at(3), -1});
  b.cross(3, false);
  // [l1 l2 l3 l3 l2 k k k k l1]: the l2 disk meets l3 only.
  auto d2 = b.horizontal(3, 1, L2, l2_ref, -1);
  b.cross(3, false);
  b.cross(2, false);
  b.cap(1);
  for (std::size_t p = 6; p >= 1; --p) b.cross(p, false);
  b.cap(0);
  b.cap(0);
  const int word[] = {1, 1, 1};
  b.braid(word);
  b.cap(1);
  b.cap(0);
  b.add_region(d1).add_region(d2).add_region(d3);
  b.reverse(K);
  MorseBuilder::Result r = b.build("L");
  return make_asset(r.diagram, {r.regions[0], r.regions[1]}, r.regions[2], {1, 1},
                    "synthesized Morse description; linking data chosen to satisfy the family computations");
}

ValidationSheet literal_validation_sheet(const FamilyAsset& a) {
  ValidationSheet sheet;
  const SurgeryPresentation& b = a.base;
  lk_l_items(b, sheet);
  sheet.items.push_back(item("lk(k,l3)", "0", str(b.lk(kKnot, kL3)), b.lk(kKnot, kL3) == 0));
  const int geo = geometric_intersection(*b.diagram(), a.l3_region, kKnot);
  sheet.items.push_back(item("k meets l3 disk (geometric)", "4", std::to_string(geo), geo == 4));
  return sheet;
}

ValidationSheet family_validation_sheet(const FamilyAsset& a) {
  ValidationSheet sheet;
  const SurgeryPresentation& b = a.base;
  sheet.items.push_back(item("components", "4", std::to_string(b.component_count()), b.component_count() == 4));
  if (b.component_count() != 4 || !b.diagram()) return sheet;
  lk_l_items(b, sheet);
  region_items(a, sheet);
  const Integer& k3 = b.lk(kKnot, kL3);
  sheet.items.push_back(item("|lk(k,l3)|", "1", str(abs(k3)), abs(k3) == 1));
  const Integer& k1 = b.lk(kKnot, kL1);
  const Integer& k2 = b.lk(kKnot, kL2);
  sheet.items.push_back(item("lk(k,l1)-lk(k,l2)", "0", str(k1 - k2), k1 == k2));
  const LinkDiagram& d = *b.diagram();
  const int alg = algebraic_intersection(d, a.annulus.outer, kKnot) - algebraic_intersection(d, a.annulus.inner, kKnot);
  const int geo = geometric_intersection(d, a.annulus.outer, kKnot) + geometric_intersection(d, a.annulus.inner, kKnot);
  sheet.items.push_back(item("k meets A (algebraic)", "0", std::to_string(alg), alg == 0));
  sheet.items.push_back(item("k meets A (geometric)", "4", std::to_string(geo), geo == 4));
  const bool signs = std::abs(a.p_orientation.s1) == 1 && std::abs(a.p_orientation.s2) == 1;
  sheet.items.push_back(item("P orientation signs", "+-1", std::to_string(a.p_orientation.s1) + "," +
                                                            std::to_string(a.p_orientation.s2), signs));
  return sheet;
}

TwistFamily::TwistFamily(FamilyAsset asset) : asset_(std::move(asset)) {
  const ValidationSheet sheet = family_validation_sheet(asset_);
  if (!sheet.passed()) throw ValidationError("asset rejected by its validation sheet:\n" + sheet.to_string());
}

SurgeryPresentation TwistFamily::base_link() const { return asset_.base; }

SurgeryPresentation TwistFamily::knot_presentation(const Integer& m, const Integer& n) const {
  return asset_.base.with_slopes({Slope(), Slope(-1, m), Slope(1, m), Slope(-1, n)});
}

SurgeryPresentation TwistFamily::surgered_presentation(const Integer& m, const Integer& n) const {
  return asset_.base.with_slopes({Slope(0, 1), Slope(-1, m), Slope(1, m), Slope(-1, n)});
}

std::vector<Move> TwistFamily::s3_script(const Integer& m, const Integer& n) {
  // Twisting l3 first would leave lk(l1,l2) = n, after which l1's slope is
  // no longer an integer twist away from 1/0.
  return {Move::twist(kL1, m), Move::twist(kL2, -m), Move::remove(kL2),
          Move::remove(kL1),   Move::twist(1, n),    Move::remove(1)};
}

KnotDiagramResult TwistFamily::knot_diagram(const Integer& m, const Integer& n) const {
  ScriptResult r = apply_move_script(knot_presentation(m, n), s3_script(m, n));
  if (r.result.component_count() != 1 || !r.result.diagram())
    throw ScriptError(r.trace.size() - 1, "reduction did not end at a single knot");
  std::ostringstream name;
  name << "k_" << n.get_str() << "_" << m.get_str();
  return {r.result.diagram()->with_name(name.str()), std::move(r.trace)};
}

SlopeDerivation TwistFamily::induced_surgery_slope(const Integer& m, const Integer& n) const {
  // -1/n on l3 is undone by n twists along its disk; the copy of S^3 that
  // results is where P sits and where lk(k, l1 u l2) is read off.
  const SurgeryPresentation twisted = rolfsen_twist(surgered_presentation(m, n).abstract(), kL3, n);
  SlopeDerivation s;
  s.m = m;
  s.n = n;
  s.lk_k_l1 = twisted.lk(kKnot, kL1);
  s.lk_k_l2 = twisted.lk(kKnot, kL2);
  s.p_linking = asset_.p_orientation.s1 * s.lk_k_l1 + asset_.p_orientation.s2 * s.lk_k_l2;
  if (s.p_linking % 2 != 0) throw PreconditionError("P-linking must be even");
  s.alpha = Slope(-s.p_linking / 2, 1);
  s.framing_check = twisted.slope(kKnot);
  return s;
}

EvidenceReport TwistFamily::same_surgery_evidence(const Integer& n, const Integer& m1, const Integer& m2) const {
  EvidenceReport rep;
  rep.n = n;
  rep.m1 = m1;
  rep.m2 = m2;
  rep.notes.push_back("homology-level evidence with replayed move traces; not a homeomorphism certificate");
  const SurgeryPresentation common = asset_.base.abstract().with_slopes(
      {Slope(0, 1), Slope::meridian(), Slope::meridian(), Slope(-1, n)});
  bool ends1 = false, ends2 = false;
  auto run = [&](const Integer& m, AbelianGroup& group, Trace& trace, SlopeDerivation& slope, bool& ends) {
    const std::string tag = "m=" + m.get_str() + ": ";
    try {
      const SurgeryPresentation p = surgered_presentation(m, n).abstract();
      group = first_homology(p);
      ScriptResult r = apply_move_script(p, {Move::twist(kL1, m), Move::twist(kL2, -m)});
      trace = std::move(r.trace);
      ends = r.result.slopes() == common.slopes() && r.result.linking() == common.linking();
      if (!ends) rep.notes.push_back(tag + "trace does not end at L(0/1,1/0,1/0,-1/n)");
      slope = induced_surgery_slope(m, n);
      if (!(slope.alpha == Slope(n, 1))) rep.notes.push_back(tag + "alpha is " + slope.alpha.to_string());
    } catch (const Error& e) {
      rep.complete = false;
      rep.notes.push_back(tag + e.what());
    }
  };
  run(m1, rep.group1, rep.trace1, rep.slope1, ends1);
  run(m2, rep.group2, rep.trace2, rep.slope2, ends2);
  rep.h1_match = rep.complete && rep.group1 == rep.group2;
  rep.common_form_match = ends1 && ends2;
  return rep;
}

}  // namespace surgeon
