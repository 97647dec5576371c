#include "solidtorus/normal.hpp"
#include "solidtorus/union_find.hpp"

#include <map>
#include <regex>
#include <sstream>

namespace solidtorus {

int quad_of_pair(int a, int b) {
  int partner = a == 0 ? b : b == 0 ? a : 6 - a - b;
  return partner - 1;
}

std::array<int, 2> quad_zero_side(int q) { return {0, q + 1}; }

long NormalVector::total() const {
  long s = 0;
  for (const auto& t : coords)
    for (long c : t) s += c;
  return s;
}

long NormalVector::arc_count(int tet, int face, int v) const {
  return coords[tet][v] + coords[tet][kQuadOffset + quad_of_pair(v, face)];
}

long NormalVector::edge_weight(int tet, int a, int b) const {
  long w = coords[tet][a] + coords[tet][b];
  const int skip = quad_of_pair(a, b);
  for (int q = 0; q < 3; ++q)
    if (q != skip) w += coords[tet][kQuadOffset + q];
  return w;
}

NormalVector NormalVector::operator+(const NormalVector& o) const {
  if (o.tet_count() != tet_count()) throw NormalError("normal vectors of different sizes");
  NormalVector r = *this;
  for (int t = 0; t < tet_count(); ++t)
    for (int k = 0; k < 7; ++k) r.coords[t][k] += o.coords[t][k];
  return r;
}

NormalVector NormalVector::operator*(long k) const {
  NormalVector r = *this;
  for (auto& t : r.coords)
    for (auto& c : t) c *= k;
  return r;
}

std::string NormalVector::to_text() const {
  std::ostringstream s;
  for (int t = 0; t < tet_count(); ++t) {
    const auto& c = coords[t];
    s << "tet " << t << ": T " << c[0] << ' ' << c[1] << ' ' << c[2] << ' ' << c[3] << " | Q " << c[4] << ' '
      << c[5] << ' ' << c[6] << '\n';
  }
  return s.str();
}

NormalVector NormalVector::from_text(const std::string& text) {
  static const std::regex line_re(
      R"(^\s*tet\s+(\d+)\s*:\s*T\s+(\d+)\s+(\d+)\s+(\d+)\s+(\d+)\s*\|\s*Q\s+(\d+)\s+(\d+)\s+(\d+)\s*$)");
  NormalVector v;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (!std::regex_match(line, m, line_re))
      throw NormalError("line " + std::to_string(lineno) + ": expected 'tet i: T a b c d | Q p q r'");
    if (std::stoi(m[1]) != v.tet_count())
      throw NormalError("line " + std::to_string(lineno) + ": tetrahedra must be listed in order");
    std::array<long, 7> c{};
    for (int k = 0; k < 7; ++k) c[k] = std::stol(m[k + 2]);
    v.coords.push_back(c);
  }
  return v;
}

nlohmann::json NormalVector::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : coords) j.push_back(c);
  return j;
}

NormalVector NormalVector::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw NormalError("normal vector JSON must be an array");
  NormalVector v;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != 7) throw NormalError("each tetrahedron needs 7 coordinates");
    std::array<long, 7> c{};
    for (int k = 0; k < 7; ++k) {
      if (!row[k].is_number_integer() || row[k].get<long>() < 0)
        throw NormalError("coordinates must be non-negative integers");
      c[k] = row[k].get<long>();
    }
    v.coords.push_back(c);
  }
  return v;
}

bool check_admissible(const NormalVector& v) {
  for (const auto& c : v.coords) {
    int nonzero = 0;
    for (int q = 0; q < 3; ++q) nonzero += c[kQuadOffset + q] != 0;
    if (nonzero > 1) return false;
    for (long x : c)
      if (x < 0) return false;
  }
  return true;
}

MatchingResult check_matching(const Triangulation& tri, const NormalVector& v) {
  if (v.tet_count() != tri.tet_count())
    throw NormalError("normal vector has " + std::to_string(v.tet_count()) + " tetrahedra, triangulation has " +
                      std::to_string(tri.tet_count()));
  const Skeleton sk = skeleton(tri);
  MatchingResult r;
  for (int t = 0; t < tri.tet_count(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      const Perm4& p = g->perm;
      if (std::make_pair(g->tet, p[f]) < std::make_pair(t, f)) continue;
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        long here = v.arc_count(t, f, c), there = v.arc_count(g->tet, p[f], p[c]);
        if (here != there) {
          r.ok = false;
          r.violations.push_back({sk.face_of[t][f], t, f, c, here, there});
        }
      }
    }
  return r;
}

DiscRef disc_at_arc(const NormalVector& v, int tet, int face, int corner, long k) {
  const long tri_count = v.at(tet, corner);
  if (k < tri_count) return {tet, corner, k};
  const int q = quad_of_pair(corner, face);
  const long quads = v.at(tet, kQuadOffset + q);
  const long m = k - tri_count;
  if (m >= quads) throw NormalError("arc index out of range");
  const bool on_zero_side = corner == 0 || corner == q + 1;
  return {tet, kQuadOffset + q, on_zero_side ? m : quads - 1 - m};
}

long disc_point_index(const NormalVector& v, const DiscRef& d, int a, int b) {
  if (d.type < kQuadOffset) {
    if (d.type == a) return d.copy;
    if (d.type == b) return v.edge_weight(d.tet, a, b) - 1 - d.copy;
    return -1;
  }
  const int q = d.type - kQuadOffset;
  if (quad_of_pair(a, b) == q) return -1;
  const long quads = v.at(d.tet, d.type);
  const bool a_zero_side = a == 0 || a == q + 1;
  return v.at(d.tet, a) + (a_zero_side ? d.copy : quads - 1 - d.copy);
}

DiscRef disc_at_point(const NormalVector& v, int tet, int a, int b, long k) {
  const long w = v.edge_weight(tet, a, b);
  if (k < v.at(tet, a)) return {tet, a, k};
  if (k >= w - v.at(tet, b)) return {tet, b, w - 1 - k};
  const int skip = quad_of_pair(a, b);
  for (int q = 0; q < 3; ++q) {
    if (q == skip || v.at(tet, kQuadOffset + q) == 0) continue;
    const long m = k - v.at(tet, a);
    const long quads = v.at(tet, kQuadOffset + q);
    const bool a_zero_side = a == 0 || a == q + 1;
    return {tet, kQuadOffset + q, a_zero_side ? m : quads - 1 - m};
  }
  throw NormalError("edge point index out of range");
}

namespace {

struct DiscIndex {
  std::vector<std::array<long, 7>> offset;
  long count = 0;

  explicit DiscIndex(const NormalVector& v) : offset(v.coords.size()) {
    for (std::size_t t = 0; t < v.coords.size(); ++t)
      for (int k = 0; k < 7; ++k) {
        offset[t][k] = count;
        count += v.coords[t][k];
      }
  }
  long id(const DiscRef& d) const { return offset[d.tet][d.type] + d.copy; }
};

// Transverse parity of a disc at corner c: +1 when its reference normal points towards c.
int towards_corner(const DiscRef& d, int c) {
  if (d.type < kQuadOffset) return 1;
  const int q = d.type - kQuadOffset;
  return (c == 0 || c == q + 1) ? 1 : -1;
}

}  // namespace

ReconstructedSurface reconstruct(const Triangulation& tri, const NormalVector& v) {
  if (!check_admissible(v)) throw NormalError("normal vector is not admissible");
  if (!check_matching(tri, v).ok) throw NormalError("normal vector does not satisfy the matching equations");
  const Skeleton sk = skeleton(tri);
  const BoundaryComplex bc = boundary_complex(tri, sk);
  const DiscIndex idx(v);

  std::vector<DiscRef> discs;
  for (int t = 0; t < v.tet_count(); ++t)
    for (int k = 0; k < 7; ++k)
      for (long j = 0; j < v.at(t, k); ++j) discs.push_back({t, k, j});

  ParityUnionFind uf(static_cast<std::size_t>(idx.count));
  std::vector<std::pair<long, long>> conflicts;

  // arcs: interior arcs are counted once, from the lexicographically smaller side
  std::vector<long> arc_owner;
  struct BoundaryArc {
    long disc;
    int triangle;
    int corner;
  };
  std::vector<BoundaryArc> boundary_arcs;
  for (int t = 0; t < tri.tet_count(); ++t)
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (g && std::make_pair(g->tet, g->perm[f]) < std::make_pair(t, f)) continue;
      for (int c = 0; c < 4; ++c) {
        if (c == f) continue;
        for (long k = 0; k < v.arc_count(t, f, c); ++k) {
          DiscRef d1 = disc_at_arc(v, t, f, c, k);
          long id1 = idx.id(d1);
          arc_owner.push_back(id1);
          if (!g) {
            int ti = bc.triangle_of(t, f);
            const auto& corners = bc.triangles[ti].corners;
            int j = static_cast<int>(std::find(corners.begin(), corners.end(), c) - corners.begin());
            boundary_arcs.push_back({id1, ti, j});
            continue;
          }
          DiscRef d2 = disc_at_arc(v, g->tet, g->perm[f], g->perm[c], k);
          long id2 = idx.id(d2);
          int rel = towards_corner(d1, c) * towards_corner(d2, g->perm[c]) == 1 ? 0 : 1;
          if (!uf.unite(static_cast<std::size_t>(id1), static_cast<std::size_t>(id2), rel))
            conflicts.emplace_back(id1, id2);
        }
      }
    }

  int ncomp = 0;
  std::vector<int> comp = class_labels(uf, ncomp);
  ReconstructedSurface out;
  out.components.resize(static_cast<std::size_t>(ncomp));
  for (auto [a, b] : conflicts) out.components[comp[a]].orientable = false;

  std::vector<long> first_disc(static_cast<std::size_t>(ncomp), -1);
  for (const auto& d : discs) {
    long id = idx.id(d);
    auto& c = out.components[comp[id]];
    if (first_disc[comp[id]] < 0) first_disc[comp[id]] = id;
    c.discs.push_back({d.tet, d.type, d.copy});
    int sign = uf.find(id).second == uf.find(first_disc[comp[id]]).second ? 1 : -1;
    c.disc_sign.push_back(sign);
    c.piece_count += 1;
    c.euler_characteristic += 1;
  }
  for (long owner : arc_owner) out.components[comp[owner]].euler_characteristic -= 1;

  // points on edge classes, via the representative slot of each class
  for (int e = 0; e < sk.edge_classes; ++e) {
    const EdgeSlot& rep = sk.edges[e].representative;
    const long w = v.edge_weight(rep.tet, rep.a, rep.b);
    for (long k = 0; k < w; ++k) {
      const long owner = idx.id(disc_at_point(v, rep.tet, rep.a, rep.b, k));
      auto& c = out.components[comp[owner]];
      c.euler_characteristic += 1;
      c.weight += 1;
    }
  }

  // boundary curves, split per component
  std::vector<NormalCurve> per_comp(static_cast<std::size_t>(ncomp));
  for (auto& pc : per_comp) pc.arcs.assign(bc.triangles.size(), {0, 0, 0});
  for (const auto& ba : boundary_arcs) per_comp[comp[ba.disc]].arcs[ba.triangle][ba.corner] += 1;
  for (int i = 0; i < ncomp; ++i) {
    if (per_comp[i].is_zero()) continue;
    out.components[i].boundary_curves = curve_components(bc, per_comp[i]);
  }

  for (const auto& c : out.components) {
    out.euler_characteristic += c.euler_characteristic;
    out.piece_count += c.piece_count;
    out.weight += c.weight;
  }
  return out;
}

long coordinate_euler_characteristic(const Triangulation& tri, const NormalVector& v) {
  const Skeleton sk = skeleton(tri);
  long discs = 0, sides = 0, boundary = 0;
  for (int t = 0; t < v.tet_count(); ++t) {
    for (int k = 0; k < 4; ++k) sides += 3 * v.at(t, k);
    for (int q = 0; q < 3; ++q) sides += 4 * v.at(t, kQuadOffset + q);
    for (int k = 0; k < 7; ++k) discs += v.at(t, k);
    for (int f = 0; f < 4; ++f)
      if (tri.is_boundary(t, f))
        for (int c = 0; c < 4; ++c)
          if (c != f) boundary += v.arc_count(t, f, c);
  }
  std::vector<long> slot_points(static_cast<std::size_t>(sk.edge_classes), 0);
  std::vector<long> degree(static_cast<std::size_t>(sk.edge_classes), 0);
  for (int t = 0; t < v.tet_count(); ++t)
    for (int e = 0; e < 6; ++e) {
      auto [a, b] = edge_vertices(e);
      slot_points[sk.edge_of[t][e]] += v.edge_weight(t, a, b);
      degree[sk.edge_of[t][e]] += 1;
    }
  long points = 0;
  for (int e = 0; e < sk.edge_classes; ++e) points += slot_points[e] / degree[e];
  return discs - (sides + boundary) / 2 + points;
}

}  // namespace solidtorus
