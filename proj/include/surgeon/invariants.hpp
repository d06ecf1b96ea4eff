#pragma once

#include <vector>

#include "surgeon/diagram.hpp"
#include "surgeon/int_matrix.hpp"
#include "surgeon/laurent.hpp"

namespace surgeon {

// Wirtinger presentation of a knot group. Generator i is the over-arc
// containing PD edge generators[i]; relator letters are +-(i + 1).
struct GroupPresentation {
  std::vector<ArcLabel> generators;
  std::vector<std::vector<int>> relators;
};

// One relator x_o^e x_a x_o^-e x_b^-1 per crossing, where x_a and x_b are
// the incoming and outgoing under-arcs, x_o the over-arc and e the sign.
GroupPresentation wirtinger(const LinkDiagram& d);

// Abelianized Fox Jacobian: entry (r, g) is d(relator r)/d(generator g)
// with every generator sent to t.
std::vector<std::vector<LaurentPoly>> fox_jacobian(const GroupPresentation& g);

// Determinant over Z[t, 1/t] by fraction-free elimination.
LaurentPoly poly_determinant(std::vector<std::vector<LaurentPoly>> m);

LaurentPoly alexander_polynomial(const LinkDiagram& d);

// |Delta(-1)|.
Integer knot_determinant(const LinkDiagram& d);

}  // namespace surgeon
