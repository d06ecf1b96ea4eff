#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace surgeon {

using ArcLabel = int;

// One crossing in PD form. Slot 0 is the incoming under-strand, the rest
// follow counterclockwise, so slot 2 is the outgoing under-strand. The
// over-strand runs between slots 1 and 3; `sign` records its direction:
// +1 when it enters at slot 3 (a right-handed crossing), -1 when it enters
// at slot 1.
struct Crossing {
  std::array<ArcLabel, 4> arcs{};
  int sign = 1;

  int over_in_slot() const { return sign > 0 ? 3 : 1; }
  int over_out_slot() const { return sign > 0 ? 1 : 3; }
  bool is_incoming(int slot) const { return slot == 0 || slot == over_in_slot(); }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A strand of the diagram crossing the spanning disk of an unknotted
// component. `direction` is +1 when the strand crosses the marking segment
// from its right-hand side to its left-hand side (upward when the segment
// is read left to right), -1 otherwise.
struct RegionStrand {
  ArcLabel arc = 0;
  int direction = 1;

  friend bool operator==(const RegionStrand&, const RegionStrand&) = default;
};

// The spanning disk of component `anchor`, recorded as the ordered list of
// arcs that cross a segment drawn across it. The unknottedness of the
// anchor is an annotation supplied by whoever built the diagram.
struct TwistRegion {
  std::vector<RegionStrand> strands;
  std::size_t anchor = 0;

  friend bool operator==(const TwistRegion&, const TwistRegion&) = default;
};

// Where an arc starts and ends. Crossingless components have no ends.
struct ArcEnds {
  int tail_crossing = -1;
  int tail_slot = -1;
  int head_crossing = -1;
  int head_slot = -1;
  bool is_loop() const { return tail_crossing < 0; }
};

// An oriented link diagram. Immutable after construction; the constructor
// validates arc consistency and derives the component partition.
//
// Components are ordered by their smallest arc label and each component's
// arcs are listed in orientation order starting from that label.
class LinkDiagram {
 public:
  LinkDiagram() = default;
  LinkDiagram(std::vector<Crossing> crossings, std::vector<ArcLabel> loops, std::string name = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<ArcLabel>& loops() const { return loops_; }
  const std::string& name() const { return name_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  std::size_t component_count() const { return components_.size(); }
  bool empty() const { return components_.empty(); }

  const std::vector<ArcLabel>& component_arcs(std::size_t i) const { return components_.at(i); }
  std::size_t component_of(ArcLabel arc) const;
  bool has_arc(ArcLabel arc) const { return ends_.count(arc) != 0; }
  const ArcEnds& ends(ArcLabel arc) const;
  ArcLabel max_label() const;

  // Component of the under-strand and of the over-strand at crossing `c`.
  std::size_t under_component(std::size_t c) const { return component_of(crossings_[c].arcs[0]); }
  std::size_t over_component(std::size_t c) const { return component_of(crossings_[c].arcs[1]); }

  LinkDiagram with_name(std::string name) const;

  // Relabels arcs 1..N, component by component in orientation order.
  // The returned map sends old labels to new ones.
  std::pair<LinkDiagram, std::map<ArcLabel, ArcLabel>> canonical_with_map() const;
  LinkDiagram canonical() const { return canonical_with_map().first; }

  LinkDiagram reversed(std::size_t component) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.loops_ == b.loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<ArcLabel> loops_;
  std::string name_;
  std::vector<std::vector<ArcLabel>> components_;
  std::map<ArcLabel, ArcEnds> ends_;
  std::map<ArcLabel, std::size_t> component_index_;
};

// PD text: a whitespace- or comma-separated sequence of `X[a,b,c,d]`
// tuples (incoming under-strand first, counterclockwise), optionally
// wrapped in `PD[...]`, plus `U[a]` for a crossingless component.
// Components that never pass under are oriented so labels increase along
// them; with only two labels, the smaller one enters the earlier crossing.
LinkDiagram parse_pd(std::string_view text, std::string name = {});
std::string serialize_pd(const LinkDiagram& d);

int linking_number(const LinkDiagram& d, std::size_t i, std::size_t j);
int writhe(const LinkDiagram& d, std::size_t i);

// Replaces the strands crossing `region` by `t` full twists (right-handed
// for t > 0). Arc labels of the region strands are kept on the side of the
// twist box where the marking segment sits, so `region` stays valid for
// the result.
LinkDiagram insert_full_twists(const LinkDiagram& d, const TwistRegion& region, long t);

struct DeletionResult {
  LinkDiagram diagram;
  std::map<ArcLabel, ArcLabel> arc_map;     // surviving old label -> new label
  std::vector<int> component_map;           // old index -> new index, -1 if deleted
};

DeletionResult delete_components(const LinkDiagram& d, const std::vector<std::size_t>& components);

// Carries a region through a deletion; strands on deleted components are
// dropped. Returns nullopt when the anchor itself was deleted.
std::optional<TwistRegion> remap_region(const TwistRegion& region, const LinkDiagram& before,
                                        const DeletionResult& deletion);

// Throws ValidationError on stale or repeated arc labels or a bad anchor.
void check_region(const LinkDiagram& d, const TwistRegion& region);

// Signed count of region strands belonging to `component`.
int algebraic_intersection(const LinkDiagram& d, const TwistRegion& region, std::size_t component);
int geometric_intersection(const LinkDiagram& d, const TwistRegion& region, std::size_t component);

// Dowker-Thistlethwaite code of a knot diagram, e.g. "4 6 2". An even
// entry is negated when the strand passes over at that even position.
std::string dt_export(const LinkDiagram& d);

}  // namespace surgeon
