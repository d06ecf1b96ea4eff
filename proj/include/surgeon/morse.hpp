#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "surgeon/diagram.hpp"

namespace surgeon {

// Builds a link diagram from a Morse description read bottom to top:
// strands sit at positions 0,1,... from left to right, cups create pairs,
// caps close them, and crossings swap neighbours. This is how diagrams are
// authored in code (the asset link, braid closures, test fixtures).
class MorseBuilder {
 public:
  using EdgeId = std::size_t;

  std::size_t width() const { return positions_.size(); }

  // New strands at `pos` and `pos + 1`. The component containing this cup
  // is ordered by the smallest tag among its cups.
  MorseBuilder& cup(std::size_t pos, int tag);
  MorseBuilder& cap(std::size_t pos);
  // Crossing between positions `pos` and `pos + 1`; with `left_over` the
  // strand coming from the lower left passes over (a positive braid
  // generator when both strands run upward).
  MorseBuilder& cross(std::size_t pos, bool left_over);
  // Braid-word shorthand: +k / -k for generator k-1 with the usual signs.
  MorseBuilder& braid(std::span<const int> word, std::size_t offset = 0);

  EdgeId edge_at(std::size_t pos) const { return positions_.at(pos); }

  // Flips the orientation of the component whose cups carry `tag`.
  MorseBuilder& reverse(int tag);

  // A spanning disk marked by a segment, given by the Morse edges that
  // cross the segment in reading order. factor * dir(edge) is +1 when the
  // edge crosses from the right-hand side of the reading direction to the
  // left-hand side, where dir is +1 for an edge traversed upward.
  // ref_factor * dir(reference), for an edge of the anchor, is +1 when
  // that crossing direction agrees with the anchor's positive normal;
  // otherwise the reading order and every sign are flipped. This keeps
  // regions valid under reversal of any component.
  struct RegionSpec {
    std::vector<std::pair<EdgeId, int>> edges;
    int anchor_tag = 0;
    EdgeId reference = 0;
    int ref_factor = 1;
  };
  // Horizontal segment across positions [first, first + count), read left
  // to right.
  RegionSpec horizontal(std::size_t first, std::size_t count, int anchor_tag, EdgeId reference,
                        int ref_factor) const;
  MorseBuilder& add_region(RegionSpec spec);

  struct Result {
    LinkDiagram diagram;
    std::vector<TwistRegion> regions;
  };
  Result build(std::string name = {}) const;

 private:
  enum class Junction { None, CupCap, Crossing };
  struct End {
    Junction kind = Junction::None;
    std::size_t partner = 0;   // edge joined by the cup or cap
    std::size_t crossing = 0;  // crossing index
  };
  struct Edge {
    End lower, upper;
    int tag = 0;
  };
  struct Event {
    std::size_t pos;
    bool left_over;
    EdgeId bl, br, tl, tr;
  };

  EdgeId new_edge(int tag);

  std::vector<EdgeId> positions_;
  std::vector<Edge> edges_;
  std::vector<Event> crossings_;
  std::vector<int> reversed_tags_;
  std::vector<RegionSpec> regions_;
};

// Closure of a braid on `strands` strands; word entries are +k / -k for
// sigma_{k} and its inverse (1-based).
LinkDiagram closed_braid(std::span<const int> word, std::size_t strands, std::string name = {});

}  // namespace surgeon
