#include "solidtorus/layered.hpp"

#include <algorithm>

namespace solidtorus {

SlopeTriple LayeredTriangulation::triple() const {
  std::vector<Slope> s;
  for (const auto& [cls, slope] : boundary_slopes) s.push_back(slope);
  if (s.size() != 3) throw LayerError("boundary does not carry exactly three labeled edges");
  return SlopeTriple(s[0], s[1], s[2]);
}

int LayeredTriangulation::edge_with_slope(const Slope& s) const {
  for (const auto& [cls, slope] : boundary_slopes)
    if (slope == s) return cls;
  return -1;
}

LayeredTriangulation base_t0() {
  LayeredTriangulation lt;
  lt.tri = Triangulation(1);
  lt.tri.glue(0, 3, 0, Perm4{{1, 2, 3, 0}});
  lt.tri.validate();

  auto h = first_homology(lt.tri);
  std::vector<std::pair<Integer, int>> by_weight;
  for (const auto& [cls, w] : h.meridian_weight) by_weight.emplace_back(w, cls);
  std::sort(by_weight.begin(), by_weight.end());
  const Slope farey_labels[3] = {Slope(1, 0), Slope(1, 1), Slope(2, 1)};
  for (int k = 0; k < 3; ++k) {
    lt.boundary_slopes[by_weight[k].second] = farey_labels[k];
    lt.age_order.push_back(farey_labels[k]);
  }
  return lt;
}

namespace {

Perm4 perm_from(const std::array<int, 4>& img) { return Perm4{img}; }

}  // namespace

LayeredTriangulation layer(const LayeredTriangulation& lt, int edge) {
  const Skeleton sk = skeleton(lt.tri);
  const BoundaryComplex bc = boundary_complex(lt.tri, sk);
  if (edge < 0 || edge >= sk.edge_classes || !sk.edges[edge].on_boundary)
    throw LayerError("edge class " + std::to_string(edge) + " is not on the boundary");

  // the first boundary triangle side lying on `edge`
  int ta = -1, sa = -1;
  for (int i = 0; i < static_cast<int>(bc.triangles.size()) && ta < 0; ++i)
    for (int s = 0; s < 3; ++s)
      if (bc.edge_class_of[bc.side_edge[i][s]] == edge) {
        ta = i;
        sa = s;
        break;
      }
  if (ta < 0) throw LayerError("edge class has no boundary side");
  const BoundarySide& nb = bc.neighbours[ta][sa];
  if (nb.triangle == ta) throw LayerError("the faces on both sides of the edge coincide");

  const BoundaryTriangle& A = bc.triangles[ta];
  const BoundaryTriangle& B = bc.triangles[nb.triangle];
  const int ja = (sa + 1) % 3, ka = (sa + 2) % 3;

  const Slope removed = lt.boundary_slopes.at(edge);
  const Slope inserted = flipped_slope(lt.triple(), removed);

  for (int swap = 0; swap < 2; ++swap) {
    int u = swap ? ka : ja, v = swap ? ja : ka;
    // new vertices 0,1 go to the ends of the edge; 2 to the apex of A, 3 to the apex of B
    std::array<int, 4> to_a{A.corners[u], A.corners[v], A.corners[sa], A.face};
    std::array<int, 4> to_b{B.corners[nb.corner_map[u]], B.corners[nb.corner_map[v]], B.face,
                            B.corners[nb.side]};
    LayeredTriangulation out;
    out.tri = lt.tri;
    int n = out.tri.add_tet();
    out.tri.glue(n, 3, A.tet, perm_from(to_a));
    out.tri.glue(n, 2, B.tet, perm_from(to_b));
    try {
      out.tri.validate();
    } catch (const ValidationError&) {
      continue;
    }
    if (!out.tri.is_orientable()) continue;

    const Skeleton nsk = skeleton(out.tri);
    for (const auto& [cls, slope] : lt.boundary_slopes) {
      if (cls == edge) continue;
      out.boundary_slopes[nsk.edge_class(sk.edges[cls].representative)] = slope;
    }
    out.boundary_slopes[nsk.edge_class(EdgeSlot{n, 2, 3})] = inserted;
    out.history = lt.history;
    out.history.push_back({static_cast<int>(out.history.size()) + 1, removed, inserted});
    for (const auto& s : lt.age_order)
      if (!(s == removed)) out.age_order.push_back(s);
    out.age_order.push_back(inserted);
    if (out.boundary_slopes.size() != 3 || !boundary_complex(out.tri, nsk).is_one_vertex_torus()) continue;
    return out;
  }
  throw LayerError("no consistent way to attach a tetrahedron across edge class " + std::to_string(edge));
}

LayeredTriangulation family(long i) {
  if (i < 0) throw std::invalid_argument("family index must be non-negative");
  LayeredTriangulation lt = base_t0();
  for (long k = 0; k < i; ++k) lt = layer(lt, lt.edge_with_slope(lt.age_order.front()));
  return lt;
}

}  // namespace solidtorus
