#include "surgeon/morse.hpp"

#include <algorithm>
#include <map>

#include "surgeon/error.hpp"

namespace surgeon {

MorseBuilder::EdgeId MorseBuilder::new_edge(int tag) {
  edges_.push_back(Edge{{}, {}, tag});
  return edges_.size() - 1;
}

MorseBuilder& MorseBuilder::cup(std::size_t pos, int tag) {
  if (pos > positions_.size()) throw PreconditionError("cup position out of range");
  EdgeId a = new_edge(tag), b = new_edge(tag);
  edges_[a].lower = {Junction::CupCap, b, 0};
  edges_[b].lower = {Junction::CupCap, a, 0};
  positions_.insert(positions_.begin() + static_cast<long>(pos), {a, b});
  return *this;
}

MorseBuilder& MorseBuilder::cap(std::size_t pos) {
  if (pos + 1 >= positions_.size()) throw PreconditionError("cap position out of range");
  EdgeId a = positions_[pos], b = positions_[pos + 1];
  edges_[a].upper = {Junction::CupCap, b, 0};
  edges_[b].upper = {Junction::CupCap, a, 0};
  positions_.erase(positions_.begin() + static_cast<long>(pos), positions_.begin() + static_cast<long>(pos) + 2);
  return *this;
}

MorseBuilder& MorseBuilder::cross(std::size_t pos, bool left_over) {
  if (pos + 1 >= positions_.size()) throw PreconditionError("crossing position out of range");
  EdgeId bl = positions_[pos], br = positions_[pos + 1];
  EdgeId tr = new_edge(edges_[bl].tag), tl = new_edge(edges_[br].tag);
  std::size_t idx = crossings_.size();
  crossings_.push_back(Event{pos, left_over, bl, br, tl, tr});
  edges_[bl].upper = {Junction::Crossing, 0, idx};
  edges_[br].upper = {Junction::Crossing, 0, idx};
  edges_[tl].lower = {Junction::Crossing, 0, idx};
  edges_[tr].lower = {Junction::Crossing, 0, idx};
  positions_[pos] = tl;
  positions_[pos + 1] = tr;
  return *this;
}

MorseBuilder& MorseBuilder::braid(std::span<const int> word, std::size_t offset) {
  for (int g : word) {
    if (g == 0) throw PreconditionError("braid generator 0 is not allowed");
    std::size_t i = static_cast<std::size_t>(g > 0 ? g : -g) - 1;
    cross(offset + i, g > 0);
  }
  return *this;
}

MorseBuilder& MorseBuilder::reverse(int tag) {
  reversed_tags_.push_back(tag);
  return *this;
}

MorseBuilder::RegionSpec MorseBuilder::horizontal(std::size_t first, std::size_t count, int anchor_tag,
                                                   EdgeId reference, int ref_factor) const {
  RegionSpec spec;
  spec.anchor_tag = anchor_tag;
  spec.reference = reference;
  spec.ref_factor = ref_factor;
  for (std::size_t p = first; p < first + count; ++p) spec.edges.push_back({positions_.at(p), 1});
  return spec;
}

MorseBuilder& MorseBuilder::add_region(RegionSpec spec) {
  regions_.push_back(std::move(spec));
  return *this;
}

MorseBuilder::Result MorseBuilder::build(std::string name) const {
  if (!positions_.empty()) throw PreconditionError("Morse description has open strands at the top");

  // Group edges into components and find each component's tag.
  const std::size_t ne = edges_.size();
  std::vector<int> comp(ne, -1);
  std::vector<int> comp_tag;
  std::vector<std::size_t> comp_first_crossing;
  auto pass_partner_up = [&](EdgeId e) {  // lower edge -> upper edge through a crossing
    const Event& x = crossings_[edges_[e].upper.crossing];
    return e == x.bl ? x.tr : x.tl;
  };
  auto pass_partner_down = [&](EdgeId e) {
    const Event& x = crossings_[edges_[e].lower.crossing];
    return e == x.tr ? x.bl : x.br;
  };

  // Walk state: an edge and a direction (+1 up, -1 down).
  auto step = [&](EdgeId e, int dir) -> std::pair<EdgeId, int> {
    const End& end = dir > 0 ? edges_[e].upper : edges_[e].lower;
    if (end.kind == Junction::CupCap) return {end.partner, -dir};
    if (dir > 0) return {pass_partner_up(e), 1};
    return {pass_partner_down(e), -1};
  };

  for (EdgeId e = 0; e < ne; ++e) {
    if (comp[e] >= 0) continue;
    int c = static_cast<int>(comp_tag.size());
    comp_tag.push_back(edges_[e].tag);
    comp_first_crossing.push_back(crossings_.size());
    EdgeId cur = e;
    int dir = 1;
    do {
      comp[cur] = c;
      comp_tag[c] = std::min(comp_tag[c], edges_[cur].tag);
      for (const End* end : {&edges_[cur].lower, &edges_[cur].upper})
        if (end->kind == Junction::Crossing)
          comp_first_crossing[c] = std::min(comp_first_crossing[c], end->crossing);
      std::tie(cur, dir) = step(cur, dir);
    } while (!(cur == e && dir == 1));
  }

  std::vector<int> order(comp_tag.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (comp_tag[a] != comp_tag[b]) return comp_tag[a] < comp_tag[b];
    return comp_first_crossing[a] < comp_first_crossing[b];
  });

  // Label arcs component by component. A walk starts just after the
  // component's first crossing, heading upward.
  struct PassInfo {
    ArcLabel in = 0, out = 0;
    int dir = 0;
  };
  std::vector<PassInfo> left_pass(crossings_.size()), right_pass(crossings_.size());
  std::vector<ArcLabel> edge_label(ne, 0);
  std::vector<int> edge_dir(ne, 0);
  std::vector<ArcLabel> loops;
  ArcLabel next_label = 1;

  for (int c : order) {
    if (comp_first_crossing[c] == crossings_.size()) {
      ArcLabel lab = next_label++;
      loops.push_back(lab);
      EdgeId start = 0;
      while (comp[start] != c) ++start;
      EdgeId cur = start;
      int dir = 1;
      do {
        edge_label[cur] = lab;
        edge_dir[cur] = dir;
        std::tie(cur, dir) = step(cur, dir);
      } while (!(cur == start && dir == 1));
      continue;
    }
    const Event& x0 = crossings_[comp_first_crossing[c]];
    bool left_in_comp = comp[x0.bl] == c;
    EdgeId start = left_in_comp ? x0.tr : x0.tl;
    EdgeId cur = start;
    int dir = 1;
    ArcLabel lab = next_label++;
    const ArcLabel first = lab;
    while (true) {
      edge_label[cur] = lab;
      edge_dir[cur] = dir;
      const End& end = dir > 0 ? edges_[cur].upper : edges_[cur].lower;
      if (end.kind == Junction::Crossing) {
        const Event& x = crossings_[end.crossing];
        bool is_left = dir > 0 ? cur == x.bl : cur == x.tr;
        EdgeId nxt = dir > 0 ? pass_partner_up(cur) : pass_partner_down(cur);
        bool closing = nxt == start && dir > 0;
        ArcLabel out = closing ? first : next_label++;
        PassInfo& p = is_left ? left_pass[end.crossing] : right_pass[end.crossing];
        p = PassInfo{lab, out, dir};
        if (closing) break;
        lab = out;
        cur = nxt;
      } else {
        cur = end.partner;
        dir = -dir;
      }
    }
  }

  std::vector<Crossing> xs;
  for (std::size_t i = 0; i < crossings_.size(); ++i) {
    const Event& x = crossings_[i];
    const PassInfo& lp = left_pass[i];
    const PassInfo& rp = right_pass[i];
    ArcLabel bl = lp.dir > 0 ? lp.in : lp.out, tr = lp.dir > 0 ? lp.out : lp.in;
    ArcLabel br = rp.dir > 0 ? rp.in : rp.out, tl = rp.dir > 0 ? rp.out : rp.in;
    std::array<ArcLabel, 4> ring = {br, tr, tl, bl};
    // Ring indices: BR=0, TR=1, TL=2, BL=3.
    int under_in = x.left_over ? (rp.dir > 0 ? 0 : 2) : (lp.dir > 0 ? 3 : 1);
    int over_in = x.left_over ? (lp.dir > 0 ? 3 : 1) : (rp.dir > 0 ? 0 : 2);
    Crossing cx;
    for (int k = 0; k < 4; ++k) cx.arcs[k] = ring[(under_in + k) % 4];
    cx.sign = ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
    xs.push_back(cx);
  }

  LinkDiagram d(std::move(xs), std::move(loops), name);

  auto component_with_tag = [&](int tag) -> std::size_t {
    for (std::size_t i = 0; i < order.size(); ++i)
      if (comp_tag[order[i]] == tag) return i;
    throw PreconditionError("no component with tag " + std::to_string(tag));
  };
  std::vector<bool> flipped(comp_tag.size(), false);
  for (int tag : reversed_tags_) {
    std::size_t ci = component_with_tag(tag);
    flipped[static_cast<std::size_t>(order[ci])] = !flipped[static_cast<std::size_t>(order[ci])];
  }
  for (std::size_t ci = 0; ci < order.size(); ++ci)
    if (flipped[static_cast<std::size_t>(order[ci])]) d = d.reversed(ci);
  auto dir_of = [&](EdgeId e) { return flipped[static_cast<std::size_t>(comp[e])] ? -edge_dir.at(e) : edge_dir.at(e); };

  std::vector<TwistRegion> regions;
  for (const RegionSpec& spec : regions_) {
    if (comp.at(spec.reference) != order[component_with_tag(spec.anchor_tag)])
      throw PreconditionError("region reference edge is not on the anchor");
    const int sigma = spec.ref_factor * dir_of(spec.reference);
    TwistRegion r;
    for (const auto& [e, factor] : spec.edges) r.strands.push_back({edge_label.at(e), sigma * factor * dir_of(e)});
    if (sigma < 0) std::reverse(r.strands.begin(), r.strands.end());
    regions.push_back(r);
  }

  auto [canon, relabel] = d.canonical_with_map();
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (RegionStrand& s : regions[i].strands) s.arc = relabel.at(s.arc);
    regions[i].anchor = component_with_tag(regions_[i].anchor_tag);
    check_region(canon, regions[i]);
  }
  return Result{canon, regions};
}

LinkDiagram closed_braid(std::span<const int> word, std::size_t strands, std::string name) {
  MorseBuilder b;
  for (std::size_t i = 0; i < strands; ++i) b.cup(i, static_cast<int>(i));
  b.braid(word);
  for (std::size_t i = strands; i-- > 0;) b.cap(i);
  return b.build(std::move(name)).diagram;
}

}  // namespace surgeon
