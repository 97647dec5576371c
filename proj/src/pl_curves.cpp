#include "solidtorus/pl.hpp"

#include <algorithm>
#include <set>

namespace solidtorus {

namespace {

using P2 = std::array<Rational, 2>;

int orient(const P2& a, const P2& b, const P2& c) {
  Rational d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

std::array<int, 3> face_vertices(int face) {
  std::array<int, 3> out{};
  int n = 0;
  for (int x = 0; x < 4; ++x)
    if (x != face) out[n++] = x;
  return out;
}

P2 project(int face, const Bary& b) {
  auto fv = face_vertices(face);
  return {b[fv[0]], b[fv[1]]};
}

Bary permute(const Perm4& perm, const Bary& p) {
  Bary q;
  for (int x = 0; x < 4; ++x) q[perm[x]] = p[x];
  return q;
}

Bary unit(int v) {
  Bary b{Rational(0), Rational(0), Rational(0), Rational(0)};
  b[v] = 1;
  return b;
}

Bary mix(const Bary& p, const Rational& eps, int v) {
  Bary q;
  for (int x = 0; x < 4; ++x) q[x] = (1 - eps) * p[x];
  q[v] += eps;
  return q;
}

int zero_count(const Bary& b) {
  return static_cast<int>(std::count_if(b.begin(), b.end(), [](const Rational& r) { return r == 0; }));
}

int zero_face(const Bary& b) {
  for (int x = 0; x < 4; ++x)
    if (b[x] == 0) return x;
  return -1;
}

// Vertex of `face` whose coordinate vanishes at p, when p lies on a side of the face.
int side_of(int face, const Bary& p) {
  for (int x : face_vertices(face))
    if (p[x] == 0) return x;
  return -1;
}

std::vector<CanonicalPoint> joints(const Triangulation& tri, const Skeleton& sk, const PLCurve& c) {
  std::vector<CanonicalPoint> out;
  const std::size_t n = c.segments.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& s = c.segments[k];
    const auto& next = c.segments[(k + 1) % n];
    auto here = canonical_point(tri, sk, s.tet, s.face, s.p1);
    auto there = canonical_point(tri, sk, next.tet, next.face, next.p0);
    if (!(here == there)) throw CurveError("consecutive segments do not meet");
    out.push_back(here);
  }
  return out;
}

// Coordinates of a point of face (tet, face) on the representative side of its class.
Bary to_rep_side(const Triangulation& tri, const Skeleton& sk, int tet, int face, const Bary& p, int& rep_face) {
  const int fc = sk.face_of[tet][face];
  const auto [rt, rf] = sk.face_rep[fc];
  rep_face = rf;
  if (rt == tet && rf == face) return p;
  const auto& g = tri.gluing(tet, face);
  if (!g || g->tet != rt || g->perm[face] != rf) throw CurveError("face is not glued to its class representative");
  return permute(g->perm, p);
}

using V3 = std::array<Rational, 3>;

V3 sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
bool is_zero(const V3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

bool segments_meet_3d(const Bary& p0b, const Bary& p1b, const Bary& q0b, const Bary& q1b) {
  const V3 p0 = to_cartesian(p0b), p1 = to_cartesian(p1b), q0 = to_cartesian(q0b), q1 = to_cartesian(q1b);
  const V3 d1 = sub(p1, p0), d2 = sub(q1, q0), r = sub(q0, p0);
  const V3 n = cross(d1, d2);
  if (!is_zero(n)) {
    if (dot(r, n) != 0) return false;
    const Rational nn = dot(n, n);
    const Rational s = dot(cross(r, d2), n) / nn;
    const Rational t = dot(cross(r, d1), n) / nn;
    return s >= 0 && s <= 1 && t >= 0 && t <= 1;
  }
  if (!is_zero(cross(r, d1))) return false;
  const Rational dd = dot(d1, d1);
  Rational t0 = dot(r, d1) / dd, t1 = dot(sub(q1, p0), d1) / dd;
  if (t0 > t1) std::swap(t0, t1);
  return t1 >= 0 && t0 <= 1;
}

std::vector<std::array<Bary, 2>> pieces(const TransverseArc& a) {
  if (a.via) return {{a.from, *a.via}, {*a.via, a.to}};
  return {{a.from, a.to}};
}

}  // namespace

CanonicalPoint canonical_point(const Triangulation& tri, const Skeleton& sk, int tet, int face, const Bary& p) {
  Rational sum = 0;
  for (const auto& x : p) {
    if (x < 0) throw CurveError("negative barycentric coordinate");
    sum += x;
  }
  if (sum != 1) throw CurveError("barycentric coordinates do not sum to 1");
  if (p[face] != 0) throw CurveError("point is not on its carrier face");
  const int zeros = zero_count(p);
  if (zeros >= 3) throw CurveError("curve passes through a vertex");
  if (zeros == 2) {
    std::array<int, 2> ends{};
    int n = 0;
    for (int x = 0; x < 4; ++x)
      if (p[x] != 0) ends[n++] = x;
    const int idx = edge_index(ends[0], ends[1]);
    const int sign = sk.edge_sign[tet][idx];
    return {1, sk.edge_of[tet][idx], {sign > 0 ? p[ends[1]] : p[ends[0]]}};
  }
  int rf = 0;
  Bary q = to_rep_side(tri, sk, tet, face, p, rf);
  CanonicalPoint out{2, sk.face_of[tet][face], {}};
  for (int x : face_vertices(rf)) out.coords.push_back(q[x]);
  return out;
}

bool is_closed(const Triangulation& tri, const PLCurve& c) {
  if (c.segments.empty()) return false;
  const Skeleton sk = skeleton(tri);
  try {
    joints(tri, sk, c);
  } catch (const CurveError&) {
    return false;
  }
  return true;
}

bool is_embedded(const Triangulation& tri, const PLCurve& c) {
  if (c.segments.empty()) return false;
  const Skeleton sk = skeleton(tri);
  std::vector<CanonicalPoint> js;
  try {
    js = joints(tri, sk, c);
  } catch (const CurveError&) {
    return false;
  }
  for (std::size_t a = 0; a < js.size(); ++a)
    for (std::size_t b = a + 1; b < js.size(); ++b)
      if (js[a] == js[b]) return false;

  const std::size_t n = c.segments.size();
  struct Placed {
    int face_class;
    int rep_face;
    Bary p0, p1;
  };
  std::vector<Placed> placed;
  for (const auto& s : c.segments) {
    if (s.p0 == s.p1) return false;
    // a segment along a side would run inside the 1-skeleton
    for (int x : face_vertices(s.face))
      if (s.p0[x] == 0 && s.p1[x] == 0) return false;
    Placed p{sk.face_of[s.tet][s.face], 0, {}, {}};
    p.p0 = to_rep_side(tri, sk, s.tet, s.face, s.p0, p.rep_face);
    p.p1 = to_rep_side(tri, sk, s.tet, s.face, s.p1, p.rep_face);
    placed.push_back(p);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (placed[a].face_class != placed[b].face_class) continue;
      const int f = placed[a].rep_face;
      const P2 a0 = project(f, placed[a].p0), a1 = project(f, placed[a].p1);
      const P2 b0 = project(f, placed[b].p0), b1 = project(f, placed[b].p1);
      if (!segments_intersect(a0, a1, b0, b1)) continue;
      const bool a_then_b = b == (a + 1) % n && placed[a].p1 == placed[b].p0;
      const bool b_then_a = a == (b + 1) % n && placed[b].p1 == placed[a].p0;
      if (!a_then_b && !b_then_a) return false;
      const bool collinear = orient(a0, a1, b0) == 0 && orient(a0, a1, b1) == 0;
      if (collinear) {
        // consecutive pieces of one straight run touch only at the joint if they keep going
        const Rational dot = (a1[0] - a0[0]) * (b1[0] - b0[0]) + (a1[1] - a0[1]) * (b1[1] - b0[1]);
        if (dot <= 0) return false;
      }
    }
  return true;
}

int one_skeleton_hits(const Triangulation& tri, const PLCurve& c) {
  const Skeleton sk = skeleton(tri);
  int hits = 0;
  for (const auto& j : joints(tri, sk, c))
    if (j.dim == 1) ++hits;
  return hits;
}

FaceArcCount arcs_per_face(const Triangulation& tri, const PLCurve& c) {
  const Skeleton sk = skeleton(tri);
  FaceArcCount out;
  for (const auto& s : c.segments) {
    int& k = out.per_face[sk.face_of[s.tet][s.face]];
    ++k;
    out.max = std::max(out.max, k);
  }
  return out;
}

long algebraic_intersection(const Triangulation& tri, const PLCurve& c, const NormalVector& v) {
  const GeometrizedSurface geo = geometrize(tri, v);
  const ReconstructedSurface surf = reconstruct(tri, v);
  std::map<DiscRef, int> sign;
  for (const auto& comp : surf.components) {
    if (!comp.orientable) throw CurveError("surface is one-sided; the pairing is undefined");
    for (std::size_t k = 0; k < comp.discs.size(); ++k) {
      const auto& d = comp.discs[k];
      sign[{static_cast<int>(d[0]), static_cast<int>(d[1]), d[2]}] = comp.disc_sign[k];
    }
  }
  long total = 0;
  for (const auto& s : c.segments) {
    const P2 p0 = project(s.face, s.p0), p1 = project(s.face, s.p1);
    for (const auto& arc : geo.arcs) {
      if (arc.tet != s.tet || arc.face != s.face) continue;
      const P2 a = project(s.face, arc.from), b = project(s.face, arc.to);
      const int o0 = orient(a, b, p0), o1 = orient(a, b, p1);
      if (o0 == 0 || o1 == 0 || orient(p0, p1, a) == 0 || orient(p0, p1, b) == 0) {
        if (segments_intersect(p0, p1, a, b)) throw CurveError("curve is not transverse to the surface");
        continue;
      }
      if (o0 == o1 || orient(p0, p1, a) == orient(p0, p1, b)) continue;
      const DiscRef d = disc_at_arc(v, arc.tet, arc.face, arc.corner, arc.index);
      int towards_corner = 1;  // reference normal of the disc at this arc
      if (d.type >= kQuadOffset) {
        const auto zs = quad_zero_side(d.type - kQuadOffset);
        towards_corner = (arc.corner == zs[0] || arc.corner == zs[1]) ? 1 : -1;
      }
      const int corner_side = orient(a, b, project(s.face, unit(arc.corner)));
      const int moving = (o1 == corner_side) ? 1 : -1;
      total += moving * towards_corner * sign.at(d);
    }
  }
  return total;
}

TetArcCount arcs_per_tet(const TransverseCurve& c) {
  TetArcCount out;
  for (const auto& a : c.arcs) {
    int& k = out.per_tet[a.tet];
    ++k;
    out.max = std::max(out.max, k);
    for (const Bary* p : {&a.from, &a.to}) {
      bool ok = zero_count(*p) == 1;
      for (const auto& x : *p) ok = ok && x >= 0;
      if (!ok) out.endpoints_in_face_interiors = false;
    }
    if (a.via && zero_count(*a.via) != 0) out.endpoints_in_face_interiors = false;
  }
  return out;
}

bool is_transverse_embedded(const Triangulation& tri, const TransverseCurve& c) {
  const std::size_t n = c.arcs.size();
  if (n == 0) return false;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = c.arcs[k];
    const auto& next = c.arcs[(k + 1) % n];
    if (zero_count(a.to) != 1 || zero_count(next.from) != 1) return false;
    const int f = zero_face(a.to);
    const auto& g = tri.gluing(a.tet, f);
    if (!g || g->tet != next.tet || permute(g->perm, a.to) != next.from) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.arcs[i].tet != c.arcs[j].tet) continue;
      for (const auto& p : pieces(c.arcs[i]))
        for (const auto& q : pieces(c.arcs[j]))
          if (segments_meet_3d(p[0], p[1], q[0], q[1])) return false;
    }
  return true;
}

std::optional<TransverseCurve> push_off(const Triangulation& tri, const PLCurve& c, const Rational& eps) {
  if (c.segments.size() != 1) throw CurveError("push_off expects a single-segment loop");
  const PLSegment& seg = c.segments.front();
  const int w1_orig = side_of(seg.face, seg.p0), w2_orig = side_of(seg.face, seg.p1);
  if (w1_orig < 0 || w2_orig < 0 || zero_count(seg.p0) != 2 || zero_count(seg.p1) != 2)
    throw CurveError("push_off expects both endpoints on edges");

  for (int side = 0; side < 2; ++side) {
    int tau = seg.tet, z = seg.face, w1 = w1_orig, w2 = w2_orig;
    Bary p0 = seg.p0, p1 = seg.p1;
    if (side == 1) {
      const auto& g = tri.gluing(seg.tet, seg.face);
      if (!g) continue;
      tau = g->tet;
      z = g->perm[seg.face];
      w1 = g->perm[w1_orig];
      w2 = g->perm[w2_orig];
      p0 = permute(g->perm, p0);
      p1 = permute(g->perm, p1);
    }
    std::array<int, 2> e1{}, e2{};
    {
      int n1 = 0, n2 = 0;
      for (int x = 0; x < 4; ++x) {
        if (x != z && x != w1) e1[n1++] = x;
        if (x != z && x != w2) e2[n2++] = x;
      }
    }
    // Around an interior edge either way round closes up; around a boundary edge only
    // the way that avoids the boundary does.
    for (int way = 0; way < 2; ++way) {
      const int exit_face = way == 0 ? w2 : z;
      const int other_face = way == 0 ? z : w2;
      Bary start = mix(p0, eps, z);
      const Bary end = mix(p1, eps, other_face);
      Wedge w{tau, e2[0], e2[1], exit_face, other_face};
      Bary point = p1;
      bool closed = false;
      std::vector<TransverseArc> walk;
      const int limit = 6 * tri.tet_count() + 2;
      for (int step = 0; step < limit && !closed; ++step) {
        const auto& g = tri.gluing(w.tet, w.c);
        if (!g) break;
        Wedge next{g->tet, g->perm[w.a], g->perm[w.b], g->perm[w.d], g->perm[w.c]};
        point = permute(g->perm, point);
        w = next;
        const bool at_start =
            w.tet == tau && std::min(w.a, w.b) == e1[0] && std::max(w.a, w.b) == e1[1] && point == p0;
        if (at_start) {
          start = mix(p0, eps, w.c);  // on the face the walk came back through
          closed = true;
          break;
        }
        walk.push_back({w.tet, mix(point, eps, w.c), mix(point, eps, w.d), std::nullopt});
      }
      if (!closed) continue;
      TransverseCurve out;
      TransverseArc main{tau, start, end, std::nullopt};
      if (zero_face(start) == zero_face(end)) {
        Bary mid;
        for (int x = 0; x < 4; ++x) mid[x] = (start[x] + end[x]) / 2;
        main.via = mix(mid, eps, zero_face(start));
      }
      out.arcs.push_back(main);
      for (auto& a : walk) out.arcs.push_back(std::move(a));
      const auto counts = arcs_per_tet(out);
      if (counts.endpoints_in_face_interiors && is_transverse_embedded(tri, out)) return out;
    }
  }
  return std::nullopt;
}

CurveCertificate make_61_curve(long i, const SearchBudget& b) {
  const LayeredTriangulation t0 = base_t0();
  const Skeleton sk0 = skeleton(t0.tri);
  const LayeredTriangulation lt = family(i);
  const Skeleton sk = skeleton(lt.tri);
  const MinimalDiscResult minimal = minimal_complexity_disc(lt.tri, b, &lt.boundary_slopes);
  if (!minimal.disc) throw CurveError("no meridian disc found within the search budget");
  const MeridianDisc& disc = *minimal.disc;

  for (int fc = 0; fc < sk0.face_classes; ++fc) {
    const auto [t, f] = sk0.face_rep[fc];
    const auto fv = face_vertices(f);
    for (int s1 = 0; s1 < 3; ++s1)
      for (int s2 = s1 + 1; s2 < 3; ++s2) {
        // sides are named by the face vertex they miss
        std::array<int, 2> slot1{}, slot2{};
        int n1 = 0, n2 = 0;
        for (int x : fv) {
          if (x != fv[s1]) slot1[n1++] = x;
          if (x != fv[s2]) slot2[n2++] = x;
        }
        const int cls = sk0.edge_of[t][edge_index(slot1[0], slot1[1])];
        if (cls != sk0.edge_of[t][edge_index(slot2[0], slot2[1])]) continue;

        // stay strictly below the first surface point on the edge in T_i
        const long weight = disc.vector.edge_weight(t, slot1[0], slot1[1]);
        const Rational tau(1, 2 * (weight + 1));
        auto place = [&](const std::array<int, 2>& slot) {
          Bary p{Rational(0), Rational(0), Rational(0), Rational(0)};
          const int sign = sk0.edge_sign[t][edge_index(slot[0], slot[1])];
          p[slot[1]] = sign > 0 ? tau : 1 - tau;
          p[slot[0]] = 1 - p[slot[1]];
          return p;
        };
        PLCurve curve{{PLSegment{t, f, place(slot1), place(slot2)}}};
        if (!is_embedded(lt.tri, curve)) continue;
        long pairing = 0;
        try {
          pairing = algebraic_intersection(lt.tri, curve, disc.vector);
        } catch (const CurveError&) {
          continue;
        }
        const int here = sk.edge_of[t][edge_index(slot1[0], slot1[1])];
        const bool interior = !sk.face_is_boundary[sk.face_of[t][f]] && !sk.edges[here].on_boundary;
        if (std::abs(pairing) != 1 || (i >= 1 && !interior)) continue;

        CurveCertificate cert;
        cert.curve = curve;
        cert.kind = interior ? CurveKind::core : CurveKind::pre_core;
        cert.witness_disc = disc;
        cert.algebraic_pairing = pairing;
        cert.max_arcs_per_face = arcs_per_face(lt.tri, curve).max;
        cert.one_skeleton_hits = one_skeleton_hits(lt.tri, curve);
        cert.embedded = true;
        cert.interior = interior;
        if (auto it = t0.boundary_slopes.find(cls); it != t0.boundary_slopes.end()) cert.hit_edge_label = it->second;
        cert.pushoff = push_off(lt.tri, curve, tau / 4);
        if (cert.pushoff) {
          const auto counts = arcs_per_tet(*cert.pushoff);
          cert.max_arcs_per_tet = counts.max;
          cert.pushoff_endpoints_ok = counts.endpoints_in_face_interiors;
        }
        return cert;
      }
  }
  throw CurveError("no single-segment loop passes the checks");
}

PrecoreLengthReport min_boundary_precore_length(long i, long window) {
  PrecoreLengthReport r;
  r.i = i;
  const LayeredTriangulation lt = family(i);
  const auto triple = lt.triple().slopes();
  auto length = [&](const Integer& cx, const Integer& cy) {
    Integer sum = 0;
    for (const auto& e : triple) sum += abs(cx * e.y() - cy * e.x());
    return sum;
  };
  const auto h = first_homology(lt.tri, &lt.boundary_slopes);
  if (!h.boundary_map_kernel_slope) throw CurveError("boundary map has no kernel");
  const Slope& m = *h.boundary_map_kernel_slope;
  const auto c0 = dual_vector(m.x(), m.y());
  bool init = false, init_unit = false;
  for (long n = -window; n <= window; ++n) {
    Integer v = length(c0[0] + n * m.x(), c0[1] + n * m.y());
    if (!init || v < r.min_length) {
      r.min_length = v;
      r.argmin_n = n;
      init = true;
    }
    Integer u = length(1, n);
    if (!init_unit || u < r.min_length_unit_form) {
      r.min_length_unit_form = u;
      init_unit = true;
    }
  }
  const Integer x_next = slope_seq(i + 2).x();
  r.third_bound = 3 * r.min_length >= x_next;
  r.phi_bound = at_least_phi_power(Rational(r.min_length), i - 1);
  return r;
}

nlohmann::json to_json(const Triangulation& tri, const PLCurve& c) {
  const Skeleton sk = skeleton(tri);
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& s : c.segments) {
    int rf = 0;
    const Bary q0 = to_rep_side(tri, sk, s.tet, s.face, s.p0, rf);
    const Bary q1 = to_rep_side(tri, sk, s.tet, s.face, s.p1, rf);
    nlohmann::json p0 = nlohmann::json::array(), p1 = nlohmann::json::array();
    for (int x : face_vertices(rf)) {
      p0.push_back(to_string(q0[x]));
      p1.push_back(to_string(q1[x]));
    }
    segs.push_back({{"face", sk.face_of[s.tet][s.face]}, {"p0", p0}, {"p1", p1}});
  }
  return segs;
}

PLCurve pl_curve_from_json(const Triangulation& tri, const nlohmann::json& j) {
  const Skeleton sk = skeleton(tri);
  PLCurve c;
  try {
    const auto& list = j.is_object() ? j.at("segments") : j;
    if (!list.is_array()) throw CurveError("a curve is a list of segments");
    for (const auto& s : list) {
      const int fc = s.at("face").get<int>();
      if (fc < 0 || fc >= sk.face_classes) throw CurveError("face class out of range");
      const auto [t, f] = sk.face_rep[fc];
      PLSegment seg{t, f, {}, {}};
      for (int end = 0; end < 2; ++end) {
        const auto& arr = s.at(end == 0 ? "p0" : "p1");
        if (!arr.is_array() || arr.size() != 3) throw CurveError("a point needs three coordinates");
        Bary& p = end == 0 ? seg.p0 : seg.p1;
        p[f] = 0;
        const auto fv = face_vertices(f);
        for (int k = 0; k < 3; ++k)
          p[fv[k]] = arr[k].is_string() ? parse_rational(arr[k].get<std::string>()) : Rational(arr[k].get<long>());
      }
      c.segments.push_back(seg);
    }
  } catch (const nlohmann::json::exception& e) {
    throw CurveError(std::string("malformed curve: ") + e.what());
  }
  return c;
}

}  // namespace solidtorus
