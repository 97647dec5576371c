#include "solidtorus/normal.hpp"
#include "solidtorus/union_find.hpp"
#include <map>

namespace solidtorus {

long NormalCurve::length() const {
  long s = 0;
  for (const auto& t : arcs) s += t[0] + t[1] + t[2];
  return s;
}

namespace {

long side_points(const NormalCurve& c, int tri, int side) {
  return c.arcs[tri][(side + 1) % 3] + c.arcs[tri][(side + 2) % 3];
}

struct CurveArc {
  int tri;
  int corner;
  long index;
};

// Walks normal arcs across boundary edges.
class CurveGraph {
 public:
  CurveGraph(const BoundaryComplex& bc, const NormalCurve& c) : bc_(bc), c_(c) {
    offset_.resize(c.arcs.size());
    for (std::size_t i = 0; i < c.arcs.size(); ++i)
      for (int j = 0; j < 3; ++j) {
        offset_[i][j] = total_;
        total_ += c.arcs[i][j];
      }
  }

  long total() const { return total_; }
  long id(const CurveArc& a) const { return offset_[a.tri][a.corner] + a.index; }

  CurveArc arc(long id) const {
    for (std::size_t i = 0; i < c_.arcs.size(); ++i)
      for (int j = 0; j < 3; ++j)
        if (id < offset_[i][j] + c_.arcs[i][j]) return {static_cast<int>(i), j, id - offset_[i][j]};
    throw NormalError("curve arc id out of range");
  }

  // Position of the endpoint of `a` on side s, counted from corner (s+1)%3.
  long position(const CurveArc& a, int side) const {
    if (a.corner == (side + 1) % 3) return a.index;
    return side_points(c_, a.tri, side) - 1 - a.index;
  }

  // The arc on the other side of the boundary edge, and the side it is entered through.
  std::pair<CurveArc, int> across(const CurveArc& a, int side) const {
    const long pos = position(a, side);
    const BoundarySide& nb = bc_.neighbours[a.tri][side];
    const int s2 = nb.side;
    const long n = side_points(c_, nb.triangle, s2);
    const long pos2 = nb.corner_map[(side + 1) % 3] == (s2 + 1) % 3 ? pos : n - 1 - pos;
    const int lead = (s2 + 1) % 3;
    if (pos2 < c_.arcs[nb.triangle][lead]) return {{nb.triangle, lead, pos2}, s2};
    return {{nb.triangle, (s2 + 2) % 3, n - 1 - pos2}, s2};
  }

 private:
  const BoundaryComplex& bc_;
  const NormalCurve& c_;
  std::vector<std::array<long, 3>> offset_;
  long total_ = 0;
};

}  // namespace

bool check_curve_matching(const BoundaryComplex& bc, const NormalCurve& c) {
  if (c.arcs.size() != bc.triangles.size()) return false;
  for (std::size_t i = 0; i < c.arcs.size(); ++i)
    for (int s = 0; s < 3; ++s) {
      if (c.arcs[i][s] < 0) return false;
      const auto& nb = bc.neighbours[i][s];
      if (side_points(c, static_cast<int>(i), s) != side_points(c, nb.triangle, nb.side)) return false;
    }
  return true;
}

std::vector<NormalCurve> curve_components(const BoundaryComplex& bc, const NormalCurve& c) {
  if (!check_curve_matching(bc, c)) throw NormalError("normal curve does not match across boundary edges");
  CurveGraph g(bc, c);
  ParityUnionFind uf(static_cast<std::size_t>(g.total()));
  for (long id = 0; id < g.total(); ++id) {
    CurveArc a = g.arc(id);
    for (int s : {(a.corner + 1) % 3, (a.corner + 2) % 3})
      uf.unite(static_cast<std::size_t>(id), static_cast<std::size_t>(g.id(g.across(a, s).first)));
  }
  int count = 0;
  auto label = class_labels(uf, count);
  std::vector<NormalCurve> out(static_cast<std::size_t>(count));
  for (auto& o : out) o.arcs.assign(c.arcs.size(), {0, 0, 0});
  for (long id = 0; id < g.total(); ++id) {
    CurveArc a = g.arc(id);
    out[label[id]].arcs[a.tri][a.corner] += 1;
  }
  return out;
}

std::optional<Slope> boundary_slope(const Triangulation& tri, const EdgeLabels& labels, const NormalCurve& c) {
  const Skeleton sk = skeleton(tri);
  const BoundaryComplex bc = boundary_complex(tri, sk);
  if (!bc.is_one_vertex_torus()) throw NormalError("boundary is not a one-vertex torus");
  if (c.is_zero()) return std::nullopt;
  if (curve_components(bc, c).size() != 1) throw NormalError("normal curve is not connected");
  const auto oriented = oriented_labels(tri, sk, bc, labels);
  if (oriented.size() != 3) throw NormalError("edge labels are not a consistent boundary basis");

  // signed crossings with each boundary edge class, oriented by the class direction
  std::map<int, long> crossing;
  CurveGraph g(bc, c);
  CurveArc cur = g.arc(0);
  int exit = (cur.corner + 1) % 3;
  long steps = 0;
  do {
    const BoundaryTriangle& t = bc.triangles[cur.tri];
    const int x = t.corners[(exit + 1) % 3], y = t.corners[(exit + 2) % 3];
    const int dir = sk.edge_sign[t.tet][edge_index(x, y)] * (x < y ? 1 : -1);
    const int agrees = dir * bc.orientation[cur.tri];
    crossing[bc.edge_class_of[bc.side_edge[cur.tri][exit]]] += agrees;
    auto [next, entered] = g.across(cur, exit);
    cur = next;
    exit = (cur.corner + 1) % 3 == entered ? (cur.corner + 2) % 3 : (cur.corner + 1) % 3;
    ++steps;
  } while (!(g.id(cur) == 0 && exit == (g.arc(0).corner + 1) % 3) && steps <= g.total());
  if (steps != g.total()) throw NormalError("normal curve walk did not close up");

  // solve crossing(e) = det(c, o_e) on two edges, check the third
  std::vector<int> cls;
  for (const auto& [k, v] : oriented) cls.push_back(k);
  const auto& oa = oriented.at(cls[0]);
  const auto& ob = oriented.at(cls[1]);
  const auto& oc = oriented.at(cls[2]);
  const Integer ia = crossing[cls[0]], ib = crossing[cls[1]], ic = crossing[cls[2]];
  const Integer d = oa[0] * ob[1] - oa[1] * ob[0];
  const Integer cx = (ib * oa[0] - ia * ob[0]) / d;
  const Integer cy = (ib * oa[1] - ia * ob[1]) / d;
  if (cx * oc[1] - cy * oc[0] != ic) throw NormalError("inconsistent crossing numbers");
  if (cx == 0 && cy == 0) return std::nullopt;
  return primitive_slope(cx, cy);
}

Integer min_curve_length(const SlopeTriple& t, const Slope& s) {
  Integer sum = 0;
  for (const auto& e : t.slopes()) sum += intersection(s, e);
  return sum;
}

}  // namespace solidtorus
