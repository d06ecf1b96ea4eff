#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surgeon/diagram.hpp"
#include "surgeon/int_matrix.hpp"
#include "surgeon/slope.hpp"

namespace surgeon {

using LinkingTable = std::vector<std::vector<Integer>>;

// A link in S^3 with one slope per component. The link is given by a
// symmetric linking table and optionally by a diagram; when both are
// present they agree. Components annotated as unknotted may be twisted
// along their spanning disks; with a diagram, each such component also
// carries a TwistRegion.
class SurgeryPresentation {
 public:
  SurgeryPresentation() = default;

  // Abstract linking data. The diagonal of `linking` is ignored.
  static SurgeryPresentation from_linking(LinkingTable linking, std::vector<Slope> slopes,
                                          std::vector<bool> unknotted = {}, std::vector<std::string> names = {},
                                          std::string label = {});
  // Linking table computed from the diagram. Every region's anchor is
  // marked unknotted and its strand signs must realize the linking numbers.
  static SurgeryPresentation from_diagram(LinkDiagram diagram, std::vector<Slope> slopes,
                                          std::vector<TwistRegion> regions, std::vector<std::string> names = {},
                                          std::string label = {});

  std::size_t component_count() const { return slopes_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Slope>& slopes() const { return slopes_; }
  const Slope& slope(std::size_t i) const { return slopes_.at(i); }
  const LinkingTable& linking() const { return linking_; }
  const Integer& lk(std::size_t i, std::size_t j) const { return linking_.at(i).at(j); }
  const std::vector<bool>& unknotted() const { return unknotted_; }
  const std::optional<LinkDiagram>& diagram() const { return diagram_; }
  const std::vector<TwistRegion>& twist_regions() const { return regions_; }
  // Region anchored at component c, if any.
  const TwistRegion* region_of(std::size_t c) const;
  // Index of the component with this name; throws if absent.
  std::size_t index_of(const std::string& name) const;

  SurgeryPresentation with_slopes(std::vector<Slope> slopes) const;
  SurgeryPresentation with_label(std::string label) const;
  // Drops the diagram and regions, keeping the linking data.
  SurgeryPresentation abstract() const;

  // Equality of names, slopes, linking table and annotations. Diagrams
  // are compared in canonical form.
  friend bool operator==(const SurgeryPresentation& a, const SurgeryPresentation& b);

 private:
  void validate() const;

  std::string label_;
  std::vector<std::string> names_;
  std::vector<Slope> slopes_;
  LinkingTable linking_;
  std::vector<bool> unknotted_;
  std::optional<LinkDiagram> diagram_;
  std::vector<TwistRegion> regions_;

  friend SurgeryPresentation rolfsen_twist(const SurgeryPresentation&, std::size_t, const Integer&);
  friend SurgeryPresentation delete_meridional(const SurgeryPresentation&, std::size_t);
};

// Row i (filled components only): p_i * mu_i + q_i * sum_j lk(i,j) mu_j.
// Columns are indexed by all components.
IntMatrix h1_relation_matrix(const SurgeryPresentation& pres);
AbelianGroup first_homology(const SurgeryPresentation& pres);
// H1 of the closed manifold obtained by filling only the filled
// components (unfilled ones are dropped from the link).
AbelianGroup ambient_homology(const SurgeryPresentation& pres);
bool is_homology_sphere(const SurgeryPresentation& pres);

// Twists `t` times along the spanning disk of unknotted component c
// (right-handed for t > 0): c's slope p/q becomes p/(q + t p), other
// slopes p_i/q_i become (p_i + t q_i lk(i,c)^2)/q_i, and lk(i,j) gains
// t lk(i,c) lk(j,c). A diagram, when present, is twisted to match.
SurgeryPresentation rolfsen_twist(const SurgeryPresentation& pres, std::size_t c, const Integer& t);

// Removes component c, whose slope must be 1/0.
SurgeryPresentation delete_meridional(const SurgeryPresentation& pres, std::size_t c);

struct Move {
  enum class Kind { RolfsenTwist, DeleteMeridional };
  Kind kind = Kind::RolfsenTwist;
  std::size_t component = 0;
  Integer t = 0;

  static Move twist(std::size_t c, const Integer& t) { return {Kind::RolfsenTwist, c, t}; }
  static Move remove(std::size_t c) { return {Kind::DeleteMeridional, c, 0}; }
  std::string to_string() const;
};

struct TraceStep {
  std::optional<Move> move;  // empty for the initial snapshot
  SurgeryPresentation snapshot;
  AbelianGroup homology;
};
using Trace = std::vector<TraceStep>;

struct ScriptResult {
  SurgeryPresentation result;
  Trace trace;
};

// Applies the moves in order and records every intermediate presentation.
// Throws ScriptError if a move's precondition fails or H1 changes.
ScriptResult apply_move_script(const SurgeryPresentation& pres, const std::vector<Move>& script);

}  // namespace surgeon
