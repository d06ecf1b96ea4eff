#include "surgeon/invariants.hpp"

#include <map>
#include <numeric>

#include "surgeon/error.hpp"

namespace surgeon {

namespace {

struct UnionFind {
  std::map<ArcLabel, ArcLabel> parent;
  ArcLabel find(ArcLabel a) {
    auto it = parent.find(a);
    if (it == parent.end()) return parent[a] = a;
    if (it->second == a) return a;
    return it->second = find(it->second);
  }
  void unite(ArcLabel a, ArcLabel b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_knot(const LinkDiagram& d) {
  if (d.component_count() != 1) throw PreconditionError("knot invariants need a 1-component diagram");
}

}  // namespace

GroupPresentation wirtinger(const LinkDiagram& d) {
  require_knot(d);
  GroupPresentation g;
  if (d.crossing_count() == 0) {
    g.generators.push_back(d.loops().front());
    return g;
  }
  UnionFind uf;
  for (const Crossing& x : d.crossings()) {
    for (ArcLabel a : x.arcs) uf.find(a);
    uf.unite(x.arcs[1], x.arcs[3]);
  }
  std::map<ArcLabel, int> index;
  for (const auto& [arc, parent] : uf.parent) {
    ArcLabel root = uf.find(arc);
    if (!index.count(root)) {
      index[root] = static_cast<int>(g.generators.size());
      g.generators.push_back(root);
    }
  }
  auto letter = [&](ArcLabel a, int power) { return power * (index.at(uf.find(a)) + 1); };
  for (const Crossing& x : d.crossings()) {
    g.relators.push_back({letter(x.arcs[1], x.sign), letter(x.arcs[0], 1), letter(x.arcs[1], -x.sign),
                          letter(x.arcs[2], -1)});
  }
  return g;
}

std::vector<std::vector<LaurentPoly>> fox_jacobian(const GroupPresentation& g) {
  std::vector<std::vector<LaurentPoly>> jac(g.relators.size(), std::vector<LaurentPoly>(g.generators.size()));
  for (std::size_t r = 0; r < g.relators.size(); ++r) {
    long prefix = 0;  // exponent sum of the letters read so far
    for (int letter : g.relators[r]) {
      const std::size_t gen = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      if (letter > 0) {
        jac[r][gen] = jac[r][gen] + LaurentPoly::t(prefix);
        ++prefix;
      } else {
        --prefix;
        jac[r][gen] = jac[r][gen] - LaurentPoly::t(prefix);
      }
    }
  }
  return jac;
}

LaurentPoly poly_determinant(std::vector<std::vector<LaurentPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPoly(1);
  int sign = 1;
  LaurentPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return LaurentPoly();
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPoly alexander_polynomial(const LinkDiagram& d) {
  const GroupPresentation g = wirtinger(d);
  const std::size_t n = g.generators.size();
  if (g.relators.size() <= 1) return LaurentPoly(1);
  auto jac = fox_jacobian(g);
  for (auto& row : jac) row.pop_back();
  auto minor_without_row = [&](std::size_t skip) {
    std::vector<std::vector<LaurentPoly>> m;
    for (std::size_t r = 0; r < jac.size(); ++r)
      if (r != skip) m.push_back(jac[r]);
    return poly_determinant(std::move(m));
  };
  LaurentPoly delta = gcd(minor_without_row(n - 1), minor_without_row(n - 2));
  return normalize_symmetric(delta);
}

Integer knot_determinant(const LinkDiagram& d) { return abs(alexander_polynomial(d).evaluate(-1)); }

}  // namespace surgeon
