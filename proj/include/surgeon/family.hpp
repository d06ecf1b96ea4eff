#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "surgeon/diagram.hpp"
#include "surgeon/int_matrix.hpp"
#include "surgeon/presentation.hpp"
#include "surgeon/slope.hpp"

namespace surgeon {

// Component order of the family link.
enum FamilyComponent : std::size_t { kKnot = 0, kL1 = 1, kL2 = 2, kL3 = 3 };

// The annulus A cobounded by l1 and l2: the spanning disk of l1 with the
// spanning disk of l2 removed. A strand of k meets A once for every pass
// through either disk; its sign through the inner disk counts negatively.
struct AnnulusRegion {
  TwistRegion outer;  // anchored at l1
  TwistRegion inner;  // anchored at l2
};

// Orientation signs that the surface P induces on l1 and l2, relative to
// their drawn orientations.
struct POrientation {
  int s1 = 1;
  int s2 = 1;
};

struct ValidationItem {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct ValidationSheet {
  std::vector<ValidationItem> items;
  bool passed() const;
  std::string to_string() const;
};

struct FamilyAsset {
  SurgeryPresentation base;  // k, l1, l2, l3, all unfilled
  AnnulusRegion annulus;
  TwistRegion l3_region;
  POrientation p_orientation;
  std::string provenance;
};

// The asset link built from its Morse description.
FamilyAsset default_asset();

// Reassembles an asset from a PD diagram plus region data, e.g. after a
// round trip through files.
FamilyAsset make_asset(const LinkDiagram& diagram, const AnnulusRegion& annulus, const TwistRegion& l3_region,
                       POrientation orientation, std::string provenance);

// Items exactly as listed for the drawn link: lk(l1,l2) = 0, lk(k,l3) = 0,
// |lk(l1,l3)| = |lk(l2,l3)| = 1 with product +1, and four geometric
// intersections of k with the l3 disk.
ValidationSheet literal_validation_sheet(const FamilyAsset& asset);

// The conditions the family computations rely on: lk(l1,l2) = 0, the l3
// linking conditions above, |lk(k,l3)| = 1, lk(k,l1) = lk(k,l2), and an
// annulus meeting k algebraically zero and geometrically four times.
// This is the hard gate for every family operation.
ValidationSheet family_validation_sheet(const FamilyAsset& asset);

struct KnotDiagramResult {
  LinkDiagram diagram;
  Trace trace;  // ambient S^3 evidence, ends with one unfilled component
};

// 2 lk(alpha, k) = -lk(k, l1 u l2) with P-induced orientations, taken in
// the copy of S^3 obtained by twisting l3 away.
struct SlopeDerivation {
  Integer m, n;
  Integer lk_k_l1, lk_k_l2;  // after the l3 twist
  Integer p_linking;         // s1 lk(k,l1) + s2 lk(k,l2)
  Slope alpha;
  Slope framing_check;  // k's slope after the same twist, from the Rolfsen rule
};

struct EvidenceReport {
  Integer n, m1, m2;
  bool h1_match = false;
  AbelianGroup group1, group2;
  Trace trace1, trace2;
  bool common_form_match = false;  // both traces end at L(0/1, 1/0, 1/0, -1/n)
  SlopeDerivation slope1, slope2;
  bool complete = true;
  std::vector<std::string> notes;
};

class TwistFamily {
 public:
  // Runs the family validation sheet; throws ValidationError when it fails.
  explicit TwistFamily(FamilyAsset asset);

  const FamilyAsset& asset() const { return asset_; }

  SurgeryPresentation base_link() const;
  // L(*, -1/m, 1/m, -1/n).
  SurgeryPresentation knot_presentation(const Integer& m, const Integer& n) const;
  // L(0/1, -1/m, 1/m, -1/n).
  SurgeryPresentation surgered_presentation(const Integer& m, const Integer& n) const;
  // Moves that reduce knot_presentation(m, n) to a knot in S^3: twist l1
  // by m and l2 by -m (the annulus twist), delete both, then twist l3 by n
  // and delete it.
  static std::vector<Move> s3_script(const Integer& m, const Integer& n);
  KnotDiagramResult knot_diagram(const Integer& m, const Integer& n) const;
  SlopeDerivation induced_surgery_slope(const Integer& m, const Integer& n) const;
  // Homology-level evidence that the surgeries on k_n^m1 and k_n^m2 agree.
  // Sub-step errors are recorded in notes and mark the report incomplete.
  EvidenceReport same_surgery_evidence(const Integer& n, const Integer& m1, const Integer& m2) const;

 private:
  FamilyAsset asset_;
};

}  // namespace surgeon
