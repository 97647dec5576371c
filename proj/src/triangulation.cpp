#include "solidtorus/triangulation.hpp"

#include "solidtorus/union_find.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>

namespace solidtorus {

// ---------------------------------------------------------------------------
// Perm4

Perm4 Perm4::inverse() const {
  Perm4 inv;
  for (int k = 0; k < 4; ++k) inv.image[image[k]] = k;
  return inv;
}

Perm4 Perm4::compose(const Perm4& first) const {
  Perm4 out;
  for (int k = 0; k < 4; ++k) out.image[k] = image[first.image[k]];
  return out;
}

bool Perm4::is_odd() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (image[i] > image[j]) ++inversions;
  return inversions % 2 == 1;
}

bool Perm4::valid() const {
  std::array<bool, 4> seen{};
  for (int v : image) {
    if (v < 0 || v > 3 || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::string Perm4::digits() const {
  std::string s;
  for (int v : image) s.push_back(static_cast<char>('0' + v));
  return s;
}

int edge_index(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

std::array<int, 2> edge_vertices(int index) {
  static constexpr std::array<std::array<int, 2>, 6> table = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return table[index];
}

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Triangulation

Triangulation::Triangulation(int tet_count) : gluings_(tet_count) {}

int Triangulation::add_tet() {
  gluings_.emplace_back();
  return tet_count() - 1;
}

void Triangulation::glue(int tet, int face, int target, const Perm4& perm) {
  gluings_[tet][face] = Gluing{target, perm};
  gluings_[target][perm[face]] = Gluing{tet, perm.inverse()};
}

void Triangulation::validate() const {
  const int n = tet_count();
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluings_[t][f];
      if (!g) continue;
      std::string where = "face (" + std::to_string(t) + "," + std::to_string(f) + ")";
      if (g->tet < 0 || g->tet >= n)
        throw ValidationError(where + " glued to missing tetrahedron " + std::to_string(g->tet));
      if (!g->perm.valid()) throw ValidationError(where + " has an invalid permutation");
      int target_face = g->perm[f];
      if (g->tet == t && target_face == f) throw ValidationError(where + " is glued to itself");
      const auto& back = gluings_[g->tet][target_face];
      if (!back || back->tet != t || back->perm != g->perm.inverse())
        throw ValidationError(where + " violates the gluing involution");
    }
  }
  // Edges identified with themselves in reverse.
  ParityUnionFind uf(static_cast<std::size_t>(6 * n));
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = gluings_[t][f];
      if (!g) continue;
      for (int e = 0; e < 6; ++e) {
        auto [a, b] = edge_vertices(e);
        if (a == f || b == f) continue;
        int pa = g->perm[a], pb = g->perm[b];
        if (!uf.unite(6 * t + e, 6 * g->tet + edge_index(pa, pb), pa > pb ? 1 : 0))
          throw ValidationError("an edge is identified with itself in reverse");
      }
    }
  }
}

std::vector<int> Triangulation::orientation() const {
  const int n = tet_count();
  std::vector<int> sign(n, 0);
  for (int start = 0; start < n; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<int> todo;
    todo.push(start);
    while (!todo.empty()) {
      int t = todo.front();
      todo.pop();
      for (int f = 0; f < 4; ++f) {
        const auto& g = gluings_[t][f];
        if (!g) continue;
        int want = g->perm.is_odd() ? sign[t] : -sign[t];
        if (sign[g->tet] == 0) {
          sign[g->tet] = want;
          todo.push(g->tet);
        } else if (sign[g->tet] != want) {
          return {};
        }
      }
    }
  }
  return sign;
}

bool Triangulation::is_orientable() const { return tet_count() == 0 || !orientation().empty(); }

// ---------------------------------------------------------------------------
// Text format

namespace {

struct LineCursor {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }
  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }
  int column() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line, column(), what); }

  std::string_view token() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  }

  long number(std::string_view tok, int col) const {
    if (tok.empty() || tok.size() > 9) throw ParseError(line, col, "expected a number");
    long v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line, col, "expected a number");
      v = v * 10 + (c - '0');
    }
    return v;
  }
};

}  // namespace

Triangulation parse_tri(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  {
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      lines.emplace_back(line_no, line);
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  Triangulation tri;
  int tet_total = -1;
  std::vector<bool> seen;
  for (auto [line_no, line] : lines) {
    LineCursor cur{line, line_no};
    if (cur.at_end()) continue;
    if (tet_total < 0) {
      auto kw = cur.token();
      if (kw != "tets") cur.fail("expected 'tets N'");
      int col = cur.column() + 1;
      auto tok = cur.token();
      tet_total = static_cast<int>(cur.number(tok, col));
      if (!cur.at_end()) cur.fail("unexpected text after tetrahedron count");
      tri = Triangulation(tet_total);
      seen.assign(tet_total, false);
      continue;
    }
    cur.skip_spaces();
    int col = cur.column();
    auto head = cur.token();
    if (head.empty() || head.back() != ':') cur.fail("expected '<index>:'");
    long t = cur.number(head.substr(0, head.size() - 1), col);
    if (t >= tet_total) throw ParseError(line_no, col, "tetrahedron index out of range");
    if (seen[t]) throw ParseError(line_no, col, "duplicate tetrahedron line");
    seen[t] = true;
    for (int f = 0; f < 4; ++f) {
      cur.skip_spaces();
      int tcol = cur.column();
      auto tok = cur.token();
      if (tok.empty()) throw ParseError(line_no, tcol, "expected four face tokens");
      if (tok == "-") continue;
      auto colon = tok.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, tcol, "expected '-' or 't:abcd'");
      long target = cur.number(tok.substr(0, colon), tcol);
      if (target >= tet_total) throw ParseError(line_no, tcol, "target tetrahedron out of range");
      auto digits = tok.substr(colon + 1);
      if (digits.size() != 4) throw ParseError(line_no, tcol, "permutation needs four digits");
      Perm4 p;
      for (int k = 0; k < 4; ++k) {
        char c = digits[k];
        if (c < '0' || c > '3') throw ParseError(line_no, tcol, "permutation digit out of range");
        p.image[k] = c - '0';
      }
      if (!p.valid()) throw ParseError(line_no, tcol, "permutation is not a bijection");
      tri.set_gluing(static_cast<int>(t), f, Gluing{static_cast<int>(target), p});
    }
    if (!cur.at_end()) cur.fail("unexpected text after four face tokens");
  }
  if (tet_total < 0) throw ParseError(1, 1, "missing 'tets N' header");
  for (int t = 0; t < tet_total; ++t)
    if (!seen[t]) throw ParseError(static_cast<int>(lines.size()), 1, "missing line for tetrahedron " + std::to_string(t));
  tri.validate();
  return tri;
}

std::string serialize_tri(const Triangulation& tri, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << "tets " << tri.tet_count() << "\n";
  for (int t = 0; t < tri.tet_count(); ++t) {
    out << t << ":";
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      out << ' ';
      if (g) out << g->tet << ':' << g->perm.digits();
      else out << '-';
    }
    out << "\n";
  }
  for (const auto& c : comments) out << "# " << c << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Skeleton

Skeleton skeleton(const Triangulation& tri) {
  const int n = tri.tet_count();
  Skeleton sk;
  sk.tets = n;

  ParityUnionFind vuf(static_cast<std::size_t>(4 * n));
  ParityUnionFind euf(static_cast<std::size_t>(6 * n));
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri.gluing(t, f);
      if (!g) continue;
      for (int v = 0; v < 4; ++v)
        if (v != f) vuf.unite(4 * t + v, 4 * g->tet + g->perm[v]);
      for (int e = 0; e < 6; ++e) {
        auto [a, b] = edge_vertices(e);
        if (a == f || b == f) continue;
        int pa = g->perm[a], pb = g->perm[b];
        euf.unite(6 * t + e, 6 * g->tet + edge_index(pa, pb), pa > pb ? 1 : 0);
      }
    }
  }

  auto vlabel = class_labels(vuf, sk.vertex_classes);
  auto elabel = class_labels(euf, sk.edge_classes);
  sk.vertex_of.resize(n);
  sk.edge_of.resize(n);
  sk.edge_sign.resize(n);
  sk.face_of.resize(n);
  sk.edges.assign(sk.edge_classes, {});
  std::vector<int> rep_parity(sk.edge_classes, -1);

  for (int t = 0; t < n; ++t) {
    for (int v = 0; v < 4; ++v) sk.vertex_of[t][v] = vlabel[4 * t + v];
    for (int e = 0; e < 6; ++e) {
      int cls = elabel[6 * t + e];
      int par = euf.find(6 * t + e).second;
      auto [a, b] = edge_vertices(e);
      auto& info = sk.edges[cls];
      if (rep_parity[cls] < 0) {
        rep_parity[cls] = par;
        info.representative = EdgeSlot{t, a, b};
      }
      sk.edge_of[t][e] = cls;
      sk.edge_sign[t][e] = (par == rep_parity[cls]) ? 1 : -1;
      ++info.degree;
      // faces containing {a,b} are those opposite the two other vertices
      for (int f = 0; f < 4; ++f)
        if (f != a && f != b && tri.is_boundary(t, f)) info.on_boundary = true;
    }
  }

  for (int t = 0; t < n; ++t) sk.face_of[t].fill(-1);
  for (int t = 0; t < n; ++t) {
    for (int f = 0; f < 4; ++f) {
      if (sk.face_of[t][f] >= 0) continue;
      int cls = sk.face_classes++;
      sk.face_of[t][f] = cls;
      sk.face_rep.push_back({t, f});
      const auto& g = tri.gluing(t, f);
      sk.face_is_boundary.push_back(!g.has_value());
      if (g) sk.face_of[g->tet][g->perm[f]] = cls;
      else ++sk.boundary_faces;
    }
  }
  return sk;
}

namespace {

std::optional<Wedge> step(const Triangulation& tri, const Wedge& w) {
  const auto& g = tri.gluing(w.tet, w.c);
  if (!g) return std::nullopt;
  const Perm4& p = g->perm;
  return Wedge{g->tet, p[w.a], p[w.b], p[w.d], p[w.c]};
}

Wedge reversed(const Wedge& w) { return Wedge{w.tet, w.a, w.b, w.d, w.c}; }

bool same_position(const Wedge& x, const Wedge& y) {
  return x.tet == y.tet && x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

std::array<int, 2> other_two(int a, int b) {
  std::array<int, 2> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != a && v != b) out[k++] = v;
  return out;
}

}  // namespace

std::vector<Wedge> edge_star(const Triangulation& tri, const Skeleton& sk, int edge_class) {
  const EdgeSlot rep = sk.edges.at(edge_class).representative;
  auto [c, d] = other_two(rep.a, rep.b);
  Wedge start{rep.tet, rep.a, rep.b, c, d};

  if (sk.edges[edge_class].on_boundary) {
    // walk backwards until the entry face is on the boundary
    Wedge back = reversed(start);
    while (auto nxt = step(tri, back)) back = *nxt;
    start = reversed(back);
  }

  std::vector<Wedge> star{start};
  Wedge cur = start;
  const std::size_t limit = static_cast<std::size_t>(6 * tri.tet_count() + 1);
  while (star.size() <= limit) {
    auto nxt = step(tri, cur);
    if (!nxt) break;
    if (same_position(*nxt, start)) break;
    star.push_back(*nxt);
    cur = *nxt;
  }
  return star;
}

// ---------------------------------------------------------------------------
// Boundary complex

int BoundaryComplex::triangle_of(int tet, int face) const {
  for (std::size_t i = 0; i < triangles.size(); ++i)
    if (triangles[i].tet == tet && triangles[i].face == face) return static_cast<int>(i);
  return -1;
}

BoundaryComplex boundary_complex(const Triangulation& tri) { return boundary_complex(tri, skeleton(tri)); }

BoundaryComplex boundary_complex(const Triangulation& tri, const Skeleton& sk) {
  BoundaryComplex bc;
  for (int t = 0; t < tri.tet_count(); ++t) {
    for (int f = 0; f < 4; ++f) {
      if (!tri.is_boundary(t, f)) continue;
      BoundaryTriangle bt{t, f, {}};
      int k = 0;
      for (int v = 0; v < 4; ++v)
        if (v != f) bt.corners[k++] = v;
      bc.triangles.push_back(bt);
    }
  }
  const int nt = static_cast<int>(bc.triangles.size());
  bc.neighbours.resize(nt);
  bc.side_edge.assign(nt, {-1, -1, -1});

  auto corner_index = [&](int tri_idx, int vertex) {
    const auto& cs = bc.triangles[tri_idx].corners;
    for (int i = 0; i < 3; ++i)
      if (cs[i] == vertex) return i;
    return -1;
  };

  for (int i = 0; i < nt; ++i) {
    const auto& bt = bc.triangles[i];
    for (int side = 0; side < 3; ++side) {
      int j = (side + 1) % 3, k = (side + 2) % 3;
      int x = bt.corners[j], y = bt.corners[k];
      int other = bt.corners[side];
      Wedge w{bt.tet, x, y, other, bt.face};
      while (auto nxt = step(tri, w)) w = *nxt;
      int nb = bc.triangle_of(w.tet, w.c);
      BoundarySide s;
      s.triangle = nb;
      s.corner_map[j] = corner_index(nb, w.a);
      s.corner_map[k] = corner_index(nb, w.b);
      int far = 3 - s.corner_map[j] - s.corner_map[k];
      s.side = far;
      bc.neighbours[i][side] = s;
    }
  }

  // edges
  for (int i = 0; i < nt; ++i) {
    for (int side = 0; side < 3; ++side) {
      if (bc.side_edge[i][side] >= 0) continue;
      int id = bc.edges++;
      bc.side_edge[i][side] = id;
      const auto& s = bc.neighbours[i][side];
      bc.side_edge[s.triangle][s.side] = id;
      const auto& bt = bc.triangles[i];
      int x = bt.corners[(side + 1) % 3], y = bt.corners[(side + 2) % 3];
      bc.edge_class_of.push_back(sk.edge_of[bt.tet][edge_index(x, y)]);
    }
  }

  // vertices, components, orientation
  ParityUnionFind vuf(static_cast<std::size_t>(3 * nt));
  ParityUnionFind tuf(static_cast<std::size_t>(nt));
  bool orientable = true;
  auto base = [](int j, int k) { return (k == (j + 1) % 3) ? 1 : -1; };
  for (int i = 0; i < nt; ++i) {
    for (int side = 0; side < 3; ++side) {
      const auto& s = bc.neighbours[i][side];
      int j = (side + 1) % 3, k = (side + 2) % 3;
      vuf.unite(3 * i + j, 3 * s.triangle + s.corner_map[j]);
      vuf.unite(3 * i + k, 3 * s.triangle + s.corner_map[k]);
      // o2 = -o1 * base(j,k) * base(j',k')
      int rel = -base(j, k) * base(s.corner_map[j], s.corner_map[k]);
      if (!tuf.unite(i, s.triangle, rel == 1 ? 0 : 1)) orientable = false;
    }
  }
  auto vlabel = class_labels(vuf, bc.vertices);
  bc.corner_vertex.resize(nt);
  for (int i = 0; i < nt; ++i)
    for (int c = 0; c < 3; ++c) bc.corner_vertex[i][c] = vlabel[3 * i + c];
  bc.component_of = class_labels(tuf, bc.components);
  if (orientable) {
    bc.orientation.resize(nt);
    for (int i = 0; i < nt; ++i) bc.orientation[i] = tuf.find(i).second == 0 ? 1 : -1;
  }
  return bc;
}

}  // namespace solidtorus
