#include "solidtorus/cut.hpp"
#include "solidtorus/union_find.hpp"

#include <map>
#include <tuple>

namespace solidtorus {

namespace {

bool on_zero_side(int q, int v) { return v == 0 || v == q + 1; }

// Quad type present in a tetrahedron, or -1.
int quad_type(const NormalVector& v, int t) {
  for (int q = 0; q < 3; ++q)
    if (v.at(t, kQuadOffset + q) > 0) return q;
  return -1;
}

struct TetRegions {
  std::array<int, 4> corner{-1, -1, -1, -1};
  std::array<int, 4> tslab{-1, -1, -1, -1};  // first triangle slab per vertex
  int qslab = -1;                              // first quad slab
  std::array<int, 2> side{-1, -1};
  int central = -1;
  int quad = -1;
};

class RegionMap {
 public:
  RegionMap(const NormalVector& v, std::vector<Region>& out) : v_(v), tets_(static_cast<std::size_t>(v.tet_count())) {
    for (int t = 0; t < v.tet_count(); ++t) {
      TetRegions& r = tets_[t];
      r.quad = quad_type(v, t);
      for (int x = 0; x < 4; ++x) {
        const long n = v.at(t, x);
        if (n >= 1) {
          r.corner[x] = static_cast<int>(out.size());
          out.push_back({t, RegionKind::corner, x, -1, 0});
        }
        if (n >= 2) r.tslab[x] = static_cast<int>(out.size());
        for (long k = 0; k + 1 < n; ++k) out.push_back({t, RegionKind::triangle_slab, x, -1, k});
      }
      if (r.quad >= 0) {
        const long n = v.at(t, kQuadOffset + r.quad);
        for (int s = 0; s < 2; ++s) {
          r.side[s] = static_cast<int>(out.size());
          out.push_back({t, RegionKind::side, -1, s, 0});
        }
        if (n >= 2) r.qslab = static_cast<int>(out.size());
        for (long k = 0; k + 1 < n; ++k) out.push_back({t, RegionKind::quad_slab, -1, -1, k});
      } else {
        r.central = static_cast<int>(out.size());
        out.push_back({t, RegionKind::central, -1, -1, 0});
      }
    }
  }

  // Region past the last triangle at vertex x.
  int beyond(int t, int x) const {
    const TetRegions& r = tets_[t];
    if (r.quad < 0) return r.central;
    return r.side[on_zero_side(r.quad, x) ? 0 : 1];
  }
  int near_vertex(int t, int x) const {
    const TetRegions& r = tets_[t];
    return r.corner[x] >= 0 ? r.corner[x] : beyond(t, x);
  }
  int tslab(int t, int x, long k) const { return tets_[t].tslab[x] + static_cast<int>(k); }
  int qslab(int t, long k) const { return tets_[t].qslab + static_cast<int>(k); }

  // Face piece of face f: corner piece at c (k = -1), strip between arcs k and k+1 at c,
  // or the central piece (c = -1).
  int face_piece(int t, int f, int c, long k) const {
    const TetRegions& r = tets_[t];
    if (c < 0) {
      if (r.quad < 0) return r.central;
      int cq = -1;
      for (int x = 0; x < 4; ++x)
        if (x != f && quad_of_pair(x, f) == r.quad) cq = x;
      return r.side[on_zero_side(r.quad, cq) ? 1 : 0];
    }
    if (k < 0) return near_vertex(t, c);
    DiscRef d1 = disc_at_arc(v_, t, f, c, k), d2 = disc_at_arc(v_, t, f, c, k + 1);
    if (d1.type < kQuadOffset && d2.type < kQuadOffset) return tslab(t, c, k);
    if (d1.type >= kQuadOffset && d2.type >= kQuadOffset) return qslab(t, std::min(d1.copy, d2.copy));
    return beyond(t, c);
  }

  // Regions on the reference-positive and negative sides of a disc.
  std::pair<int, int> disc_sides(const DiscRef& d) const {
    const int t = d.tet;
    if (d.type < kQuadOffset) {
      const long n = v_.at(t, d.type);
      int toward = d.copy == 0 ? tets_[t].corner[d.type] : tslab(t, d.type, d.copy - 1);
      int away = d.copy == n - 1 ? beyond(t, d.type) : tslab(t, d.type, d.copy);
      return {toward, away};
    }
    const long n = v_.at(t, d.type);
    int zero = d.copy == 0 ? tets_[t].side[0] : qslab(t, d.copy - 1);
    int other = d.copy == n - 1 ? tets_[t].side[1] : qslab(t, d.copy);
    return {zero, other};
  }

 private:
  const NormalVector& v_;
  std::vector<TetRegions> tets_;
};

}  // namespace

CutComplex cut_along(const Triangulation& tri, const NormalVector& v) {
  const ReconstructedSurface s = reconstruct(tri, v);
  CutComplex x;
  x.vector = v;
  for (const auto& comp : s.components) {
    if (!comp.orientable) throw NormalError("cannot cut along a one-sided surface");
    for (std::size_t i = 0; i < comp.discs.size(); ++i) {
      const auto& d = comp.discs[i];
      x.disc_sign[DiscRef{static_cast<int>(d[0]), static_cast<int>(d[1]), d[2]}] = comp.disc_sign[i];
    }
  }

  RegionMap rm(v, x.regions);
  ParityUnionFind uf(x.regions.size());
  long arcs = 0;
  for (int t = 0; t < tri.tet_count(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (g && std::make_pair(g->tet, g->perm[f]) < std::make_pair(t, f)) continue;
      auto link = [&](int c, long k) {
        int here = rm.face_piece(t, f, c, k);
        if (!g) {
          x.patches.push_back({PatchLabel::a, here});
          return;
        }
        int there = rm.face_piece(g->tet, g->perm[f], c < 0 ? -1 : g->perm[c], k);
        x.adjacency.emplace_back(here, there);
        uf.unite(static_cast<std::size_t>(here), static_cast<std::size_t>(there));
      };
      link(-1, 0);
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        const long n = v.arc_count(t, f, c);
        arcs += n;
        if (n == 0) continue;
        link(c, -1);
        for (long k = 0; k + 1 < n; ++k) link(c, k);
      }
    }
  // the surface splits each tetrahedron; a disc's two sides are different regions
  for (const auto& [d, sign] : x.disc_sign) {
    auto [pos, neg] = rm.disc_sides(d);
    x.patches.push_back({sign > 0 ? PatchLabel::d_plus : PatchLabel::d_minus, pos});
    x.patches.push_back({sign > 0 ? PatchLabel::d_minus : PatchLabel::d_plus, neg});
  }
  x.component_of = class_labels(uf, x.components);

  const Skeleton sk = skeleton(tri);
  // chi(X) = chi(M) + chi(S): the cells of S are doubled by the cut, and each of the
  // W points, A arcs and D discs splits one cell of M into two
  x.euler_characteristic = sk.euler_characteristic() + s.weight - arcs + s.piece_count;
  return x;
}

namespace {

using SlabKey = std::tuple<int, int, int, long>;

class SlabGraph {
 public:
  int id(const SlabKey& k) {
    auto [it, fresh] = ids_.try_emplace(k, static_cast<int>(slabs_.size()));
    if (fresh) {
      auto [dim, cell, corner, index] = k;
      slabs_.push_back({static_cast<SlabDim>(dim), cell, corner, index});
      sides_.push_back({false, false});
      boundary_.push_back(false);
    }
    return it->second;
  }
  int find(const SlabKey& k) const {
    auto it = ids_.find(k);
    return it == ids_.end() ? -1 : it->second;
  }
  void touch(int slab, int side) { (side > 0 ? sides_[slab].second : sides_[slab].first) = true; }
  void mark_boundary(int slab) { boundary_[slab] = true; }

  std::vector<Slab> slabs_;
  std::vector<std::pair<bool, bool>> sides_;  // (meets D-, meets D+)
  std::vector<bool> boundary_;

 private:
  std::map<SlabKey, int> ids_;
};

}  // namespace

std::vector<BundleComponent> parallelity_bundle(const Triangulation& tri, const CutComplex& x) {
  const NormalVector& v = x.vector;
  const Skeleton sk = skeleton(tri);
  auto sigma = [&](const DiscRef& d) { return x.disc_sign.at(d); };
  auto towards = [](const DiscRef& d, int c) {
    return d.type < kQuadOffset ? 1 : (on_zero_side(d.type - kQuadOffset, c) ? 1 : -1);
  };

  SlabGraph g;
  // slabs in tetrahedra
  for (int t = 0; t < v.tet_count(); ++t)
    for (int type = 0; type < 7; ++type)
      for (long k = 0; k + 1 < v.at(t, type); ++k) {
        int id = g.id({3, t, type, k});
        g.touch(id, -sigma({t, type, k}));
        g.touch(id, sigma({t, type, k + 1}));
      }
  // slabs in faces, on the representative side
  for (int fc = 0; fc < sk.face_classes; ++fc) {
    auto [t, f] = sk.face_rep[fc];
    for (int c = 0; c < 4; ++c) {
      if (c == f) continue;
      for (long k = 0; k + 1 < v.arc_count(t, f, c); ++k) {
        int id = g.id({2, fc, c, k});
        DiscRef lo = disc_at_arc(v, t, f, c, k), hi = disc_at_arc(v, t, f, c, k + 1);
        g.touch(id, -sigma(lo) * towards(lo, c));
        g.touch(id, sigma(hi) * towards(hi, c));
        if (sk.face_is_boundary[fc]) g.mark_boundary(id);
      }
    }
  }
  // slabs on edges, along the representative direction
  for (int e = 0; e < sk.edge_classes; ++e) {
    const EdgeSlot& rep = sk.edges[e].representative;
    const long w = v.edge_weight(rep.tet, rep.a, rep.b);
    auto along = [&](const DiscRef& d) {
      // +1 when the disc's reference normal points from rep.a towards rep.b
      if (d.type < kQuadOffset) return d.type == rep.b ? 1 : -1;
      return on_zero_side(d.type - kQuadOffset, rep.a) ? -1 : 1;
    };
    for (long i = 0; i + 1 < w; ++i) {
      int id = g.id({1, e, 0, i});
      DiscRef lo = disc_at_point(v, rep.tet, rep.a, rep.b, i), hi = disc_at_point(v, rep.tet, rep.a, rep.b, i + 1);
      g.touch(id, sigma(lo) * along(lo));
      g.touch(id, -sigma(hi) * along(hi));
      if (sk.edges[e].on_boundary) g.mark_boundary(id);
    }
  }

  ParityUnionFind uf(g.slabs_.size());
  std::vector<std::pair<int, int>> conflicts;
  auto join = [&](int a, int b, int parity) {
    if (a < 0 || b < 0) throw NormalError("parallelity slab adjacency is inconsistent");
    if (!uf.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b), parity)) conflicts.emplace_back(a, b);
  };
  auto face_key = [&](int t, int f, int c, long k) -> SlabKey {
    const int fc = sk.face_of[t][f];
    auto [rt, rf] = sk.face_rep[fc];
    if (rt == t && rf == f) return {2, fc, c, k};
    const auto& gl = tri.gluing(t, f);
    return {2, fc, gl->perm[c], k};
  };

  // tetrahedron slabs to face slabs: fibres run from copy k to k+1, face fibres run
  // away from the corner
  for (int t = 0; t < v.tet_count(); ++t)
    for (int type = 0; type < 7; ++type)
      for (long k = 0; k + 1 < v.at(t, type); ++k) {
        int id = g.find({3, t, type, k});
        for (int f = 0; f < 4; ++f) {
          if (type < kQuadOffset) {
            if (f == type) continue;
            join(id, g.find(face_key(t, f, type, k)), 0);
          } else {
            const int q = type - kQuadOffset;
            int c = -1;
            for (int y = 0; y < 4; ++y)
              if (y != f && quad_of_pair(y, f) == q) c = y;
            const long quads = v.at(t, type);
            const bool zs = on_zero_side(q, c);
            long a0 = v.at(t, c) + (zs ? k : quads - 1 - k);
            long a1 = v.at(t, c) + (zs ? k + 1 : quads - 2 - k);
            join(id, g.find(face_key(t, f, c, std::min(a0, a1))), zs ? 0 : 1);
          }
        }
      }
  // face slabs to edge slabs
  for (int fc = 0; fc < sk.face_classes; ++fc) {
    auto [t, f] = sk.face_rep[fc];
    for (int c = 0; c < 4; ++c) {
      if (c == f) continue;
      for (long k = 0; k + 1 < v.arc_count(t, f, c); ++k) {
        int id = g.find({2, fc, c, k});
        for (int y = 0; y < 4; ++y) {
          if (y == f || y == c) continue;
          const int ei = edge_index(c, y);
          const int e = sk.edge_of[t][ei];
          const bool agrees = sk.edge_sign[t][ei] * (c < y ? 1 : -1) == 1;
          const long w = v.edge_weight(t, c, y);
          join(id, g.find({1, e, 0, agrees ? k : w - 2 - k}), agrees ? 0 : 1);
        }
      }
    }
  }

  int count = 0;
  auto label = class_labels(uf, count);
  std::vector<BundleComponent> out(static_cast<std::size_t>(count));
  for (std::size_t s = 0; s < g.slabs_.size(); ++s) {
    auto& c = out[label[s]];
    const Slab& slab = g.slabs_[s];
    c.slabs.push_back(slab);
    c.base_euler += slab.dim == SlabDim::face ? -1 : 1;
    c.meets_dminus = c.meets_dminus || g.sides_[s].first;
    c.meets_dplus = c.meets_dplus || g.sides_[s].second;
    c.meets_a = c.meets_a || g.boundary_[s];
  }
  for (auto [a, b] : conflicts) out[label[a]].base_orientable = false;
  return out;
}

std::vector<BundleComponent> bundle_prime(const std::vector<BundleComponent>& components) {
  std::vector<BundleComponent> out;
  for (const auto& c : components)
    if (c.meets_a) out.push_back(c);
  return out;
}

ClaimReport check_claims(const Triangulation& tri, const NormalVector& v, const EdgeLabels* labels,
                         const SearchBudget* verify_minimal) {
  ClaimReport r;
  if (verify_minimal) {
    auto best = minimal_complexity_disc(tri, *verify_minimal, labels);
    if (best.disc && best.status == Verdict::pass)
      r.input = best.disc->vector == v ? Minimality::minimal : Minimality::not_minimal;
  }
  const CutComplex x = cut_along(tri, v);
  const auto bundle = parallelity_bundle(tri, x);
  r.claim1 = true;
  r.claim2 = true;
  for (std::size_t i = 0; i < bundle.size(); ++i) {
    const auto& c = bundle[i];
    if (!c.base_orientable) {
      r.claim1 = false;
      r.details.push_back("bundle component " + std::to_string(i) + " is twisted");
    }
    if (c.meets_a && !(c.meets_dminus && c.meets_dplus)) {
      r.claim2 = false;
      r.details.push_back("bundle component " + std::to_string(i) + " meets A but only " +
                          (c.meets_dplus ? "D+" : "D-"));
    }
  }
  if ((!r.claim1 || !r.claim2) && r.input == Minimality::not_minimal) r.details.push_back("input not minimal");
  return r;
}

}  // namespace solidtorus
