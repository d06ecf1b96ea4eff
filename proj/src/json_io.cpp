#include "surgeon/json_io.hpp"

#include "surgeon/error.hpp"

namespace surgeon {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string", 0);
    return v;
  }
  throw ParseError("expected an integer", 0);
}

Json slope_json(const Slope& s) {
  if (s.is_unfilled()) return nullptr;
  return Json::array({integer_json(s.p()), integer_json(s.q())});
}

Slope slope_from_json(const Json& j) {
  if (j.is_null()) return Slope();
  if (!j.is_array() || j.size() != 2) throw ParseError("slope must be [p, q] or null", 0);
  return Slope(integer_from_json(j[0]), integer_from_json(j[1]));
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const Integer& t : g.torsion) torsion.push_back(integer_json(t));
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

Json laurent_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.coefficients()) j[std::to_string(e)] = integer_json(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) p = p + LaurentPoly::monomial(integer_from_json(v), std::stol(k));
  return p;
}

Json region_json(const TwistRegion& r) {
  Json strands = Json::array();
  for (const RegionStrand& s : r.strands) strands.push_back(Json::array({s.arc, s.direction}));
  return {{"anchor", r.anchor}, {"strands", strands}};
}

TwistRegion region_from_json(const Json& j) {
  TwistRegion r;
  r.anchor = j.at("anchor").get<std::size_t>();
  for (const Json& s : j.at("strands")) r.strands.push_back({s.at(0).get<ArcLabel>(), s.at(1).get<int>()});
  return r;
}

Json presentation_json(const SurgeryPresentation& p) {
  Json slopes = Json::array(), linking = Json::array();
  for (const Slope& s : p.slopes()) slopes.push_back(slope_json(s));
  for (const auto& row : p.linking()) {
    Json r = Json::array();
    for (const Integer& v : row) r.push_back(integer_json(v));
    linking.push_back(r);
  }
  Json j = {{"label", p.label()}, {"names", p.names()}, {"slopes", slopes}, {"linking", linking},
            {"unknotted", p.unknotted()}};
  if (p.diagram()) {
    Json regions = Json::array();
    for (const TwistRegion& r : p.twist_regions()) regions.push_back(region_json(r));
    j["pd"] = serialize_pd(*p.diagram());
    j["regions"] = regions;
  }
  return j;
}

SurgeryPresentation presentation_from_json(const Json& j) {
  std::vector<Slope> slopes;
  for (const Json& s : j.at("slopes")) slopes.push_back(slope_from_json(s));
  auto names = j.at("names").get<std::vector<std::string>>();
  const std::string label = j.value("label", std::string());
  if (j.contains("pd")) {
    std::vector<TwistRegion> regions;
    for (const Json& r : j.at("regions")) regions.push_back(region_from_json(r));
    SurgeryPresentation p = SurgeryPresentation::from_diagram(parse_pd(j.at("pd").get<std::string>(), label),
                                                              slopes, regions, names, label);
    if (j.contains("linking")) {
      // The stored table is redundant; a mismatch means the file was edited.
      LinkingTable stored;
      for (const Json& row : j.at("linking")) {
        stored.emplace_back();
        for (const Json& v : row) stored.back().push_back(integer_from_json(v));
      }
      if (stored != p.linking()) throw ValidationError("stored linking table disagrees with the diagram");
    }
    return p;
  }
  LinkingTable linking;
  for (const Json& row : j.at("linking")) {
    linking.emplace_back();
    for (const Json& v : row) linking.back().push_back(integer_from_json(v));
  }
  std::vector<bool> unknotted;
  if (j.contains("unknotted")) unknotted = j.at("unknotted").get<std::vector<bool>>();
  return SurgeryPresentation::from_linking(linking, slopes, unknotted, names, label);
}

Json trace_json(const Trace& t) {
  Json arr = Json::array();
  for (const TraceStep& s : t) {
    Json step = {{"move", s.move ? Json(s.move->to_string()) : Json(nullptr)},
                 {"presentation", presentation_json(s.snapshot.abstract())},
                 {"homology", group_json(s.homology)}};
    if (s.snapshot.diagram()) step["crossings"] = s.snapshot.diagram()->crossing_count();
    arr.push_back(step);
  }
  return arr;
}

Json sheet_json(const ValidationSheet& s) {
  Json items = Json::array();
  for (const ValidationItem& i : s.items)
    items.push_back({{"name", i.name}, {"expected", i.expected}, {"observed", i.observed}, {"pass", i.pass}});
  return {{"passed", s.passed()}, {"items", items}};
}

Json slope_derivation_json(const SlopeDerivation& s) {
  return {{"m", integer_json(s.m)},
          {"n", integer_json(s.n)},
          {"lk_k_l1", integer_json(s.lk_k_l1)},
          {"lk_k_l2", integer_json(s.lk_k_l2)},
          {"p_linking", integer_json(s.p_linking)},
          {"alpha", slope_json(s.alpha)},
          {"framing_check", slope_json(s.framing_check)}};
}

Json report_json(const EvidenceReport& r) {
  return {{"n", integer_json(r.n)},
          {"m1", integer_json(r.m1)},
          {"m2", integer_json(r.m2)},
          {"h1_match", r.h1_match},
          {"groups", Json::array({group_json(r.group1), group_json(r.group2)})},
          {"common_form_match", r.common_form_match},
          {"traces", Json::array({trace_json(r.trace1), trace_json(r.trace2)})},
          {"slope_check", Json::array({slope_derivation_json(r.slope1), slope_derivation_json(r.slope2)})},
          {"complete", r.complete},
          {"notes", r.notes}};
}

Json asset_json(const FamilyAsset& a) {
  return {{"names", a.base.names()},
          {"pd", serialize_pd(*a.base.diagram())},
          {"annulus", {{"outer", region_json(a.annulus.outer)}, {"inner", region_json(a.annulus.inner)}}},
          {"l3_region", region_json(a.l3_region)},
          {"p_orientation", {a.p_orientation.s1, a.p_orientation.s2}},
          {"provenance", a.provenance}};
}

FamilyAsset asset_from_json(const Json& j) {
  const Json& ann = j.at("annulus");
  const Json& po = j.at("p_orientation");
  return make_asset(parse_pd(j.at("pd").get<std::string>(), "L"),
                    {region_from_json(ann.at("outer")), region_from_json(ann.at("inner"))},
                    region_from_json(j.at("l3_region")), {po.at(0).get<int>(), po.at(1).get<int>()},
                    j.value("provenance", std::string()));
}

}  // namespace surgeon
