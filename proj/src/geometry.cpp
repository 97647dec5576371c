#include "solidtorus/normal.hpp"

#include <map>

namespace solidtorus {

Point3 to_cartesian(const Bary& b) {
  static const int ref[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  Point3 p{Rational(0), Rational(0), Rational(0)};
  for (int v = 0; v < 4; ++v)
    for (int k = 0; k < 3; ++k) p[k] += b[v] * ref[v][k];
  return p;
}

namespace {

using P2 = std::array<Rational, 2>;

int orient(const P2& a, const P2& b, const P2& c) {
  Rational d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

bool on_segment(const P2& a, const P2& b, const P2& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) && std::min(a[1], b[1]) <= p[1] &&
         p[1] <= std::max(a[1], b[1]);
}

Bary edge_point(const NormalVector& v, int tet, int a, int b, long k) {
  const long w = v.edge_weight(tet, a, b);
  Bary p{Rational(0), Rational(0), Rational(0), Rational(0)};
  Rational lambda(k + 1, w + 1);
  p[a] = 1 - lambda;
  p[b] = lambda;
  return p;
}

}  // namespace

bool segments_intersect(const P2& p1, const P2& p2, const P2& q1, const P2& q2) {
  int o1 = orient(p1, p2, q1), o2 = orient(p1, p2, q2);
  int o3 = orient(q1, q2, p1), o4 = orient(q1, q2, p2);
  if (o1 != o2 && o3 != o4 && o1 * o2 <= 0 && o3 * o4 <= 0) {
    if (o1 != 0 || o2 != 0) return true;
  }
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool GeometrizedSurface::arcs_disjoint() const {
  std::map<std::pair<int, int>, std::vector<const GeoArc*>> by_face;
  for (const auto& a : arcs) by_face[{a.tet, a.face}].push_back(&a);
  for (const auto& [key, list] : by_face) {
    std::array<int, 2> axes{};
    int n = 0;
    for (int x = 0; x < 4 && n < 2; ++x)
      if (x != key.second) axes[n++] = x;
    auto project = [&](const Bary& b) { return P2{b[axes[0]], b[axes[1]]}; };
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if (segments_intersect(project(list[i]->from), project(list[i]->to), project(list[j]->from),
                               project(list[j]->to)))
          return false;
  }
  return true;
}

GeometrizedSurface geometrize(const Triangulation& tri, const NormalVector& v) {
  if (!check_admissible(v)) throw NormalError("normal vector is not admissible");
  if (!check_matching(tri, v).ok) throw NormalError("normal vector does not satisfy the matching equations");
  GeometrizedSurface g;
  for (int t = 0; t < v.tet_count(); ++t) {
    for (int x = 0; x < 4; ++x)
      for (long j = 0; j < v.at(t, x); ++j) {
        GeoDisc d{{t, x, j}, {}, {}};
        for (int y = 0; y < 4; ++y)
          if (y != x) d.corners.push_back(edge_point(v, t, x, y, j));
        d.flat.push_back({d.corners[0], d.corners[1], d.corners[2]});
        g.discs.push_back(std::move(d));
      }
    for (int q = 0; q < 3; ++q) {
      const auto zero_side = quad_zero_side(q);
      std::array<int, 2> other{};
      int n = 0;
      for (int x = 0; x < 4; ++x)
        if (x != zero_side[0] && x != zero_side[1]) other[n++] = x;
      for (long j = 0; j < v.at(t, kQuadOffset + q); ++j) {
        DiscRef ref{t, kQuadOffset + q, j};
        GeoDisc d{ref, {}, {}};
        const std::array<std::array<int, 2>, 4> cyc{{{zero_side[0], other[0]},
                                                     {zero_side[0], other[1]},
                                                     {zero_side[1], other[1]},
                                                     {zero_side[1], other[0]}}};
        for (auto [a, b] : cyc) d.corners.push_back(edge_point(v, t, a, b, disc_point_index(v, ref, a, b)));
        d.flat.push_back({d.corners[0], d.corners[1], d.corners[2]});
        d.flat.push_back({d.corners[0], d.corners[2], d.corners[3]});
        g.discs.push_back(std::move(d));
      }
    }
    for (int f = 0; f < 4; ++f)
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        std::array<int, 2> ends{};
        int n = 0;
        for (int x = 0; x < 4; ++x)
          if (x != f && x != c) ends[n++] = x;
        for (long k = 0; k < v.arc_count(t, f, c); ++k)
          g.arcs.push_back({t, f, c, k, edge_point(v, t, c, ends[0], k), edge_point(v, t, c, ends[1], k)});
      }
  }
  return g;
}

}  // namespace solidtorus
