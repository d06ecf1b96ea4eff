#include "surgeon/presentation.hpp"

#include <algorithm>
#include <limits>

#include "surgeon/error.hpp"

namespace surgeon {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return names;
}

LinkingTable diagram_linking(const LinkDiagram& d) {
  const std::size_t n = d.component_count();
  LinkingTable t(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) t[i][j] = t[j][i] = linking_number(d, i, j);
  return t;
}

}  // namespace

SurgeryPresentation SurgeryPresentation::from_linking(LinkingTable linking, std::vector<Slope> slopes,
                                                      std::vector<bool> unknotted, std::vector<std::string> names,
                                                      std::string label) {
  SurgeryPresentation p;
  const std::size_t n = slopes.size();
  p.label_ = std::move(label);
  p.names_ = names.empty() ? default_names(n) : std::move(names);
  p.slopes_ = std::move(slopes);
  p.linking_ = std::move(linking);
  for (std::size_t i = 0; i < p.linking_.size(); ++i)
    if (i < p.linking_[i].size()) p.linking_[i][i] = 0;
  p.unknotted_ = unknotted.empty() ? std::vector<bool>(n, false) : std::move(unknotted);
  p.validate();
  return p;
}

SurgeryPresentation SurgeryPresentation::from_diagram(LinkDiagram diagram, std::vector<Slope> slopes,
                                                      std::vector<TwistRegion> regions, std::vector<std::string> names,
                                                      std::string label) {
  SurgeryPresentation p;
  const std::size_t n = diagram.component_count();
  p.label_ = std::move(label);
  p.names_ = names.empty() ? default_names(n) : std::move(names);
  p.slopes_ = std::move(slopes);
  p.linking_ = diagram_linking(diagram);
  p.unknotted_.assign(n, false);
  for (const TwistRegion& r : regions)
    if (r.anchor < n) p.unknotted_[r.anchor] = true;
  p.diagram_ = std::move(diagram);
  p.regions_ = std::move(regions);
  p.validate();
  return p;
}

void SurgeryPresentation::validate() const {
  const std::size_t n = slopes_.size();
  if (names_.size() != n) throw ValidationError("expected one name per component");
  if (unknotted_.size() != n) throw ValidationError("expected one unknot flag per component");
  if (linking_.size() != n) throw ValidationError("linking table size differs from the slope count");
  for (std::size_t i = 0; i < n; ++i) {
    if (linking_[i].size() != n) throw ValidationError("linking table is not square");
    for (std::size_t j = 0; j < n; ++j)
      if (linking_[i][j] != linking_[j][i]) throw ValidationError("linking table is not symmetric");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw ValidationError("duplicate component name " + names_[i]);
  if (!diagram_) {
    if (!regions_.empty()) throw ValidationError("twist regions need a diagram");
    return;
  }
  const LinkDiagram& d = *diagram_;
  if (d.component_count() != n) throw ValidationError("slope count differs from the diagram's component count");
  if (diagram_linking(d) != linking_) throw ValidationError("linking table disagrees with the diagram");
  std::vector<bool> has_region(n, false);
  for (const TwistRegion& r : regions_) {
    check_region(d, r);
    if (has_region[r.anchor]) throw ValidationError("two twist regions share an anchor");
    has_region[r.anchor] = true;
    if (!unknotted_[r.anchor]) throw ValidationError("twist region anchor is not marked unknotted");
    for (std::size_t i = 0; i < n; ++i)
      if (i != r.anchor && algebraic_intersection(d, r, i) != linking_[i][r.anchor])
        throw ValidationError("region of " + names_[r.anchor] + " disagrees with lk(" + names_[i] + ", " +
                              names_[r.anchor] + ")");
  }
}

const TwistRegion* SurgeryPresentation::region_of(std::size_t c) const {
  for (const TwistRegion& r : regions_)
    if (r.anchor == c) return &r;
  return nullptr;
}

std::size_t SurgeryPresentation::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw PreconditionError("no component named " + name);
}

SurgeryPresentation SurgeryPresentation::with_slopes(std::vector<Slope> slopes) const {
  SurgeryPresentation p = *this;
  p.slopes_ = std::move(slopes);
  p.validate();
  return p;
}

SurgeryPresentation SurgeryPresentation::with_label(std::string label) const {
  SurgeryPresentation p = *this;
  p.label_ = std::move(label);
  return p;
}

SurgeryPresentation SurgeryPresentation::abstract() const {
  SurgeryPresentation p = *this;
  p.diagram_.reset();
  p.regions_.clear();
  return p;
}

bool operator==(const SurgeryPresentation& a, const SurgeryPresentation& b) {
  if (a.names_ != b.names_ || a.slopes_ != b.slopes_ || a.linking_ != b.linking_ || a.unknotted_ != b.unknotted_)
    return false;
  if (a.diagram_.has_value() != b.diagram_.has_value()) return false;
  if (!a.diagram_) return true;
  return a.diagram_->canonical() == b.diagram_->canonical();
}

IntMatrix h1_relation_matrix(const SurgeryPresentation& pres) {
  const std::size_t n = pres.component_count();
  std::vector<std::size_t> filled;
  for (std::size_t i = 0; i < n; ++i)
    if (!pres.slope(i).is_unfilled()) filled.push_back(i);
  IntMatrix m(filled.size(), n);
  for (std::size_t r = 0; r < filled.size(); ++r) {
    const std::size_t i = filled[r];
    const Slope& s = pres.slope(i);
    for (std::size_t j = 0; j < n; ++j) m(r, j) = s.q() * pres.lk(i, j);
    m(r, i) = s.p();
  }
  return m;
}

AbelianGroup first_homology(const SurgeryPresentation& pres) { return cokernel_of_relations(h1_relation_matrix(pres)); }

AbelianGroup ambient_homology(const SurgeryPresentation& pres) {
  const std::size_t n = pres.component_count();
  std::vector<std::size_t> filled;
  for (std::size_t i = 0; i < n; ++i)
    if (!pres.slope(i).is_unfilled()) filled.push_back(i);
  IntMatrix m(filled.size(), filled.size());
  for (std::size_t r = 0; r < filled.size(); ++r) {
    const Slope& s = pres.slope(filled[r]);
    for (std::size_t c = 0; c < filled.size(); ++c) m(r, c) = s.q() * pres.lk(filled[r], filled[c]);
    m(r, r) = s.p();
  }
  return cokernel_of_relations(m);
}

bool is_homology_sphere(const SurgeryPresentation& pres) { return first_homology(pres).trivial(); }

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& pres, std::size_t c, const Integer& t) {
  const std::size_t n = pres.component_count();
  if (c >= n) throw PreconditionError("component index out of range");
  if (pres.slope(c).is_unfilled()) throw PreconditionError("cannot twist along unfilled component " + pres.names_[c]);
  if (!pres.unknotted_[c]) throw PreconditionError("component " + pres.names_[c] + " is not marked unknotted");
  if (pres.diagram_ && !pres.region_of(c))
    throw PreconditionError("component " + pres.names_[c] + " has no twist region");
  if (t == 0) return pres;

  SurgeryPresentation out = pres;
  const Slope& sc = pres.slope(c);
  out.slopes_[c] = Slope(sc.p(), sc.q() + t * sc.p());
  for (std::size_t i = 0; i < n; ++i) {
    if (i == c) continue;
    const Integer& l = pres.lk(i, c);
    if (!pres.slope(i).is_unfilled() && l != 0) {
      const Slope& s = pres.slope(i);
      out.slopes_[i] = Slope(s.p() + t * s.q() * l * l, s.q());
    }
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && j != c) out.linking_[i][j] = pres.lk(i, j) + t * l * pres.lk(j, c);
  }

  if (pres.diagram_) {
    if (!t.fits_slong_p()) throw PreconditionError("twist parameter too large for a diagram");
    LinkDiagram twisted = insert_full_twists(*pres.diagram_, *pres.region_of(c), t.get_si());
    auto [canon, relabel] = twisted.canonical_with_map();
    for (TwistRegion& r : out.regions_)
      for (RegionStrand& s : r.strands) s.arc = relabel.at(s.arc);
    out.diagram_ = canon.with_name(pres.diagram_->name());
    // Disks of other components that the twisted strands pass through are
    // dragged into the twist box; their recorded strands go stale and the
    // region is dropped rather than repaired.
    std::erase_if(out.regions_, [&](const TwistRegion& r) {
      if (r.anchor == c) return false;
      try {
        check_region(*out.diagram_, r);
      } catch (const ValidationError&) {
        return true;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (i != r.anchor && algebraic_intersection(*out.diagram_, r, i) != out.linking_[i][r.anchor]) return true;
      return false;
    });
  }
  out.validate();
  return out;
}

SurgeryPresentation delete_meridional(const SurgeryPresentation& pres, std::size_t c) {
  const std::size_t n = pres.component_count();
  if (c >= n) throw PreconditionError("component index out of range");
  if (!pres.slope(c).is_meridional())
    throw PreconditionError("component " + pres.names_[c] + " has slope " + pres.slope(c).to_string() + ", not 1/0");

  SurgeryPresentation out;
  out.label_ = pres.label_;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == c) continue;
    out.names_.push_back(pres.names_[i]);
    out.slopes_.push_back(pres.slopes_[i]);
    out.unknotted_.push_back(pres.unknotted_[i]);
    std::vector<Integer> row;
    for (std::size_t j = 0; j < n; ++j)
      if (j != c) row.push_back(pres.lk(i, j));
    out.linking_.push_back(std::move(row));
  }
  if (pres.diagram_) {
    DeletionResult del = delete_components(*pres.diagram_, {c});
    for (const TwistRegion& r : pres.regions_)
      if (auto mapped = remap_region(r, *pres.diagram_, del)) out.regions_.push_back(*mapped);
    out.diagram_ = del.diagram;
  }
  out.validate();
  return out;
}

std::string Move::to_string() const {
  if (kind == Kind::RolfsenTwist) return "twist(" + std::to_string(component) + ", " + t.get_str() + ")";
  return "delete(" + std::to_string(component) + ")";
}

ScriptResult apply_move_script(const SurgeryPresentation& pres, const std::vector<Move>& script) {
  ScriptResult res{pres, {}};
  res.trace.push_back({std::nullopt, pres, first_homology(pres)});
  for (std::size_t k = 0; k < script.size(); ++k) {
    const Move& m = script[k];
    try {
      res.result = m.kind == Move::Kind::RolfsenTwist ? rolfsen_twist(res.result, m.component, m.t)
                                                      : delete_meridional(res.result, m.component);
    } catch (const Error& e) {
      throw ScriptError(k, e.what());
    }
    AbelianGroup h = first_homology(res.result);
    if (h != res.trace.front().homology)
      throw ScriptError(k, "first homology changed from " + res.trace.front().homology.to_string() + " to " +
                               h.to_string());
    res.trace.push_back({m, res.result, std::move(h)});
  }
  return res;
}

}  // namespace surgeon
