#include "surgeon/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "surgeon/error.hpp"

namespace surgeon {

namespace {

struct Occurrence {
  int crossing;
  int slot;
};

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings, std::vector<ArcLabel> loops, std::string name)
    : crossings_(std::move(crossings)), loops_(std::move(loops)), name_(std::move(name)) {
  std::sort(loops_.begin(), loops_.end());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    if (x.sign != 1 && x.sign != -1) throw ValidationError("crossing " + std::to_string(c) + ": sign must be +1 or -1");
    for (int s = 0; s < 4; ++s) {
      ArcLabel a = x.arcs[s];
      if (a <= 0) throw ValidationError("arc labels must be positive, got " + std::to_string(a));
      ArcEnds& e = ends_[a];
      if (x.is_incoming(s)) {
        if (e.head_crossing >= 0) throw ValidationError("arc " + std::to_string(a) + " enters more than one crossing");
        e.head_crossing = static_cast<int>(c);
        e.head_slot = s;
      } else {
        if (e.tail_crossing >= 0) throw ValidationError("arc " + std::to_string(a) + " leaves more than one crossing");
        e.tail_crossing = static_cast<int>(c);
        e.tail_slot = s;
      }
    }
  }
  for (const auto& [a, e] : ends_) {
    if (e.head_crossing < 0 || e.tail_crossing < 0)
      throw ValidationError("arc " + std::to_string(a) + " must appear exactly twice, once entering and once leaving");
  }
  for (std::size_t i = 0; i < loops_.size(); ++i) {
    ArcLabel a = loops_[i];
    if (a <= 0) throw ValidationError("arc labels must be positive, got " + std::to_string(a));
    if (ends_.count(a)) throw ValidationError("loop label " + std::to_string(a) + " also used by a crossing");
    if (i > 0 && loops_[i - 1] == a) throw ValidationError("duplicate loop label " + std::to_string(a));
    ends_[a] = ArcEnds{};
  }

  // Walk components in ascending order of their smallest label.
  for (const auto& [start, e0] : ends_) {
    if (component_index_.count(start)) continue;
    std::size_t idx = components_.size();
    components_.emplace_back();
    ArcLabel a = start;
    do {
      components_[idx].push_back(a);
      component_index_[a] = idx;
      const ArcEnds& e = ends_.at(a);
      if (e.is_loop()) break;
      a = crossings_[e.head_crossing].arcs[(e.head_slot + 2) % 4];
      if (component_index_.count(a) && a != start)
        throw ValidationError("arc " + std::to_string(a) + " revisited before closing the cycle");
    } while (a != start);
  }
}

std::size_t LinkDiagram::component_of(ArcLabel arc) const {
  auto it = component_index_.find(arc);
  if (it == component_index_.end()) throw ValidationError("unknown arc label " + std::to_string(arc));
  return it->second;
}

const ArcEnds& LinkDiagram::ends(ArcLabel arc) const {
  auto it = ends_.find(arc);
  if (it == ends_.end()) throw ValidationError("unknown arc label " + std::to_string(arc));
  return it->second;
}

ArcLabel LinkDiagram::max_label() const { return ends_.empty() ? 0 : ends_.rbegin()->first; }

LinkDiagram LinkDiagram::with_name(std::string name) const {
  LinkDiagram d = *this;
  d.name_ = std::move(name);
  return d;
}

std::pair<LinkDiagram, std::map<ArcLabel, ArcLabel>> LinkDiagram::canonical_with_map() const {
  std::map<ArcLabel, ArcLabel> relabel;
  ArcLabel next = 1;
  for (const auto& comp : components_) {
    std::size_t start = 0;
    // A two-arc component that only passes over reads the same both ways
    // in PD text; its smaller label must enter the earlier crossing.
    if (comp.size() == 2 && ends_.at(comp[0]).head_slot % 2 == 1 && ends_.at(comp[1]).head_slot % 2 == 1 &&
        ends_.at(comp[1]).head_crossing < ends_.at(comp[0]).head_crossing)
      start = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) relabel[comp[(start + k) % comp.size()]] = next++;
  }
  std::vector<Crossing> xs = crossings_;
  for (Crossing& x : xs)
    for (ArcLabel& a : x.arcs) a = relabel.at(a);
  std::vector<ArcLabel> loops;
  for (ArcLabel a : loops_) loops.push_back(relabel.at(a));
  return {LinkDiagram(std::move(xs), std::move(loops), name_), std::move(relabel)};
}

LinkDiagram LinkDiagram::reversed(std::size_t component) const {
  if (component >= components_.size()) throw PreconditionError("component index out of range");
  std::vector<Crossing> xs = crossings_;
  for (std::size_t c = 0; c < xs.size(); ++c) {
    Crossing& x = xs[c];
    bool under_rev = component_of(x.arcs[0]) == component;
    bool over_rev = component_of(x.arcs[1]) == component;
    if (under_rev) {
      // The outgoing under-arc becomes the incoming one: rotate by two slots.
      x.arcs = {x.arcs[2], x.arcs[3], x.arcs[0], x.arcs[1]};
    }
    if (under_rev != over_rev) x.sign = -x.sign;
  }
  return LinkDiagram(std::move(xs), loops_, name_);
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ','))
      ++pos_;
  }
  bool at_end() {
    skip_separators();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  std::size_t pos() const { return pos_; }

  void expect(char ch) {
    skip_blank();
    if (peek() != ch) throw ParseError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }
  bool accept(std::string_view word) {
    skip_blank();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_blank();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      throw ParseError("expected integer", start);
    long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (v <= 0 || v > 1'000'000'000) throw ParseError("arc labels must be positive integers", start);
    return static_cast<int>(v);
  }

 private:
  void skip_blank() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text, std::string name) {
  PdScanner sc(text);
  bool wrapped = false;
  sc.skip_separators();
  if (sc.accept("PD[")) wrapped = true;

  std::vector<std::array<ArcLabel, 4>> tuples;
  std::vector<ArcLabel> loops;
  while (true) {
    sc.skip_separators();
    if (wrapped && sc.peek() == ']') {
      sc.expect(']');
      break;
    }
    if (sc.at_end()) {
      if (wrapped) throw ParseError("missing closing ']' for PD[", sc.pos());
      break;
    }
    if (sc.accept("X[")) {
      std::array<ArcLabel, 4> t{};
      for (int i = 0; i < 4; ++i) {
        if (i) sc.expect(',');
        t[i] = sc.integer();
      }
      sc.expect(']');
      tuples.push_back(t);
    } else if (sc.accept("U[")) {
      loops.push_back(sc.integer());
      sc.expect(']');
    } else {
      throw ParseError("expected X[...] or U[...]", sc.pos());
    }
  }
  if (wrapped && !sc.at_end()) throw ParseError("trailing text after PD[...]", sc.pos());

  // Each label must occur exactly twice among the tuples.
  std::map<ArcLabel, std::vector<Occurrence>> occ;
  for (std::size_t c = 0; c < tuples.size(); ++c)
    for (int s = 0; s < 4; ++s) occ[tuples[c][s]].push_back({static_cast<int>(c), s});
  for (const auto& [a, v] : occ)
    if (v.size() != 2)
      throw ValidationError("arc " + std::to_string(a) + " appears " + std::to_string(v.size()) + " times (expected 2)");

  auto other = [&](ArcLabel a, Occurrence o) {
    const auto& v = occ.at(a);
    return (v[0].crossing == o.crossing && v[0].slot == o.slot) ? v[1] : v[0];
  };

  // Orient each cycle of passes. A cycle containing an under-pass is
  // oriented by it (slot 0 is incoming); a cycle of over-passes only is
  // oriented so that labels increase along it.
  std::vector<int> signs(tuples.size(), 0);
  std::vector<std::array<bool, 2>> visited(tuples.size(), {false, false});  // [under pass, over pass]

  auto walk = [&](Occurrence entry) {
    Occurrence cur = entry;
    while (true) {
      int pass = (cur.slot % 2 == 0) ? 0 : 1;
      auto& seen = visited[cur.crossing][pass];
      if (seen) break;
      seen = true;
      if (pass == 0) {
        if (cur.slot != 0)
          throw ValidationError("inconsistent orientation at crossing " + std::to_string(cur.crossing));
      } else {
        signs[cur.crossing] = (cur.slot == 3) ? 1 : -1;
      }
      Occurrence out{cur.crossing, (cur.slot + 2) % 4};
      cur = other(tuples[out.crossing][out.slot], out);
    }
  };

  for (std::size_t c = 0; c < tuples.size(); ++c)
    if (!visited[c][0]) walk({static_cast<int>(c), 0});

  for (std::size_t c = 0; c < tuples.size(); ++c) {
    if (visited[c][1]) continue;
    // Over-only cycle: collect its labels to apply the increasing-label rule.
    std::set<ArcLabel> labels;
    Occurrence cur{static_cast<int>(c), 1};
    for (std::size_t guard = 0; guard <= 4 * tuples.size(); ++guard) {
      Occurrence out{cur.crossing, (cur.slot + 2) % 4};
      ArcLabel a = tuples[out.crossing][out.slot];
      labels.insert(a);
      cur = other(a, out);
      if (cur.crossing == static_cast<int>(c) && (cur.slot == 1 || cur.slot == 3)) break;
    }
    if (labels.size() == 2) {
      // Both directions read as increasing; the smaller label enters the
      // crossing listed first.
      const ArcLabel a = *labels.begin();
      const auto& v = occ.at(a);
      walk(v[0].crossing <= v[1].crossing ? v[0] : v[1]);
      continue;
    }
    ArcLabel b = tuples[c][1], d = tuples[c][3];
    auto it = labels.upper_bound(d);
    ArcLabel next_after_d = (it == labels.end()) ? *labels.begin() : *it;
    walk({static_cast<int>(c), next_after_d == b ? 3 : 1});
  }

  std::vector<Crossing> xs;
  xs.reserve(tuples.size());
  for (std::size_t c = 0; c < tuples.size(); ++c) xs.push_back(Crossing{tuples[c], signs[c]});
  return LinkDiagram(std::move(xs), std::move(loops), std::move(name));
}

std::string serialize_pd(const LinkDiagram& d) {
  LinkDiagram c = d.canonical();
  std::ostringstream os;
  bool first = true;
  for (const Crossing& x : c.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x.arcs[0] << ',' << x.arcs[1] << ',' << x.arcs[2] << ',' << x.arcs[3] << ']';
  }
  for (ArcLabel a : c.loops()) {
    if (!first) os << ' ';
    first = false;
    os << "U[" << a << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Counting

int linking_number(const LinkDiagram& d, std::size_t i, std::size_t j) {
  if (i == j) throw PreconditionError("linking number needs two distinct components; use writhe for one");
  if (i >= d.component_count() || j >= d.component_count()) throw PreconditionError("component index out of range");
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    std::size_t u = d.under_component(c), o = d.over_component(c);
    if ((u == i && o == j) || (u == j && o == i)) total += d.crossings()[c].sign;
  }
  if (total % 2 != 0) throw ValidationError("odd signed crossing count between two components");
  return total / 2;
}

int writhe(const LinkDiagram& d, std::size_t i) {
  if (i >= d.component_count()) throw PreconditionError("component index out of range");
  int total = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c)
    if (d.under_component(c) == i && d.over_component(c) == i) total += d.crossings()[c].sign;
  return total;
}

// ---------------------------------------------------------------------------
// Twist regions

void check_region(const LinkDiagram& d, const TwistRegion& region) {
  if (region.anchor >= d.component_count()) throw ValidationError("twist region anchor out of range");
  std::set<ArcLabel> seen;
  for (const RegionStrand& s : region.strands) {
    if (!d.has_arc(s.arc)) throw ValidationError("twist region references stale arc " + std::to_string(s.arc));
    if (s.direction != 1 && s.direction != -1) throw ValidationError("region strand direction must be +1 or -1");
    if (!seen.insert(s.arc).second) throw ValidationError("twist region lists arc " + std::to_string(s.arc) + " twice");
    if (d.component_of(s.arc) == region.anchor) throw ValidationError("twist region strand lies on its own anchor");
  }
}

int algebraic_intersection(const LinkDiagram& d, const TwistRegion& region, std::size_t component) {
  int total = 0;
  for (const RegionStrand& s : region.strands)
    if (d.component_of(s.arc) == component) total += s.direction;
  return total;
}

int geometric_intersection(const LinkDiagram& d, const TwistRegion& region, std::size_t component) {
  int total = 0;
  for (const RegionStrand& s : region.strands)
    if (d.component_of(s.arc) == component) ++total;
  return total;
}

LinkDiagram insert_full_twists(const LinkDiagram& d, const TwistRegion& region, long t) {
  check_region(d, region);
  const std::size_t k = region.strands.size();
  if (t == 0 || k < 2) return d;

  std::vector<Crossing> xs = d.crossings();
  std::vector<ArcLabel> loops = d.loops();
  ArcLabel fresh = d.max_label();

  std::vector<ArcLabel> current(k);  // label of the segment each strand occupies
  std::vector<int> dir(k);
  for (std::size_t s = 0; s < k; ++s) {
    current[s] = region.strands[s].arc;
    dir[s] = region.strands[s].direction;
  }
  std::vector<std::size_t> at(k);  // strand at each position
  std::iota(at.begin(), at.end(), 0);

  const int gen = t > 0 ? 1 : -1;
  const long reps = (t > 0 ? t : -t) * static_cast<long>(k);
  for (long r = 0; r < reps; ++r) {
    for (std::size_t p = 0; p + 1 < k; ++p) {
      std::size_t left = at[p], right = at[p + 1];
      ArcLabel bl = current[left], br = current[right];
      ArcLabel tr = ++fresh, tl = ++fresh;
      std::size_t over = gen > 0 ? left : right;
      std::size_t under = gen > 0 ? right : left;
      // Counterclockwise order of the four ends: BR, TR, TL, BL.
      std::array<ArcLabel, 4> ring = {br, tr, tl, bl};
      auto bottom_index = [&](std::size_t s) { return s == left ? 3 : 0; };
      auto top_index = [&](std::size_t s) { return s == left ? 1 : 2; };
      int under_in = dir[under] > 0 ? bottom_index(under) : top_index(under);
      int over_in = dir[over] > 0 ? bottom_index(over) : top_index(over);
      Crossing x;
      for (int i = 0; i < 4; ++i) x.arcs[i] = ring[(under_in + i) % 4];
      x.sign = ((over_in - under_in + 4) % 4 == 3) ? 1 : -1;
      xs.push_back(x);
      current[left] = tr;
      current[right] = tl;
      std::swap(at[p], at[p + 1]);
    }
  }

  // Reconnect the far side of the box to the rest of each arc.
  std::map<ArcLabel, ArcLabel> rename_in_box;
  for (std::size_t s = 0; s < k; ++s) {
    ArcLabel a = region.strands[s].arc;
    const ArcEnds& e = d.ends(a);
    if (e.is_loop()) {
      rename_in_box[current[s]] = a;
      loops.erase(std::remove(loops.begin(), loops.end(), a), loops.end());
      continue;
    }
    // Upward strands keep `a` below the box, so the head side is renamed;
    // downward strands reach the box from their tail side.
    if (dir[s] > 0)
      xs[e.head_crossing].arcs[e.head_slot] = current[s];
    else
      xs[e.tail_crossing].arcs[e.tail_slot] = current[s];
  }
  if (!rename_in_box.empty()) {
    for (std::size_t c = d.crossing_count(); c < xs.size(); ++c)
      for (ArcLabel& a : xs[c].arcs) {
        auto it = rename_in_box.find(a);
        if (it != rename_in_box.end()) a = it->second;
      }
  }
  return LinkDiagram(std::move(xs), std::move(loops), d.name());
}

DeletionResult delete_components(const LinkDiagram& d, const std::vector<std::size_t>& components) {
  std::set<std::size_t> gone(components.begin(), components.end());
  for (std::size_t c : gone)
    if (c >= d.component_count()) throw PreconditionError("component index out of range");

  std::map<ArcLabel, ArcLabel> parent;
  std::function<ArcLabel(ArcLabel)> find = [&](ArcLabel a) {
    auto it = parent.find(a);
    if (it == parent.end() || it->second == a) return a;
    ArcLabel r = find(it->second);
    parent[a] = r;
    return r;
  };
  auto unite = [&](ArcLabel a, ArcLabel b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  };

  std::vector<Crossing> kept;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossings()[c];
    bool under_gone = gone.count(d.under_component(c)) != 0;
    bool over_gone = gone.count(d.over_component(c)) != 0;
    if (!under_gone && !over_gone) {
      kept.push_back(x);
    } else if (under_gone && !over_gone) {
      unite(x.arcs[1], x.arcs[3]);
    } else if (!under_gone && over_gone) {
      unite(x.arcs[0], x.arcs[2]);
    }
  }

  DeletionResult result;
  std::set<ArcLabel> used;
  for (Crossing& x : kept)
    for (ArcLabel& a : x.arcs) {
      a = find(a);
      used.insert(a);
    }
  std::vector<ArcLabel> loops;
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    if (gone.count(i)) continue;
    for (ArcLabel a : d.component_arcs(i)) {
      ArcLabel r = find(a);
      result.arc_map[a] = r;
      if (!used.count(r) && std::find(loops.begin(), loops.end(), r) == loops.end()) loops.push_back(r);
    }
  }
  result.diagram = LinkDiagram(std::move(kept), std::move(loops), d.name());

  result.component_map.assign(d.component_count(), -1);
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    if (gone.count(i)) continue;
    result.component_map[i] =
        static_cast<int>(result.diagram.component_of(result.arc_map.at(d.component_arcs(i).front())));
  }
  return result;
}

std::optional<TwistRegion> remap_region(const TwistRegion& region, const LinkDiagram& before,
                                        const DeletionResult& deletion) {
  int anchor = deletion.component_map.at(region.anchor);
  if (anchor < 0) return std::nullopt;
  TwistRegion out;
  out.anchor = static_cast<std::size_t>(anchor);
  for (const RegionStrand& s : region.strands) {
    if (deletion.component_map.at(before.component_of(s.arc)) < 0) continue;
    out.strands.push_back({deletion.arc_map.at(s.arc), s.direction});
  }
  check_region(deletion.diagram, out);
  return out;
}

// ---------------------------------------------------------------------------
// DT codes

std::string dt_export(const LinkDiagram& d) {
  if (d.component_count() != 1) throw PreconditionError("DT codes are defined for knots (one component)");
  if (d.crossing_count() == 0) return "";

  const auto& arcs = d.component_arcs(0);
  // Start so that the first pass is an over-pass.
  std::size_t start = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const ArcEnds& e = d.ends(arcs[i]);
    if (e.head_slot % 2 == 1) {
      start = i;
      break;
    }
  }
  const std::size_t n = d.crossing_count();
  std::vector<int> odd(n, 0), even(n, 0);
  std::vector<bool> even_over(n, false);
  for (std::size_t step = 0; step < arcs.size(); ++step) {
    const ArcEnds& e = d.ends(arcs[(start + step) % arcs.size()]);
    int label = static_cast<int>(step) + 1;
    auto c = static_cast<std::size_t>(e.head_crossing);
    if (label % 2 == 1) {
      if (odd[c]) throw ValidationError("crossing visited twice at odd positions; diagram is not planar");
      odd[c] = label;
    } else {
      if (even[c]) throw ValidationError("crossing visited twice at even positions; diagram is not planar");
      even[c] = label;
      even_over[c] = e.head_slot % 2 == 1;
    }
  }
  std::vector<int> code(n);
  for (std::size_t c = 0; c < n; ++c) code[(odd[c] - 1) / 2] = even_over[c] ? -even[c] : even[c];
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) os << (i ? " " : "") << code[i];
  return os.str();
}

}  // namespace surgeon
