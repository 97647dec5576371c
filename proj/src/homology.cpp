#include "solidtorus/homology.hpp"

#include <algorithm>
#include <sstream>

namespace solidtorus {

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Integer> diag;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    while (true) {
      // smallest nonzero pivot in the trailing block
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return [&] {
          std::vector<Integer> out;
          for (auto& d : diag) out.push_back(d);
          return out;
        }();
      std::swap(m[k], m[pr]);
      for (auto& row : m) std::swap(row[k], row[pc]);
      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        Integer q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
        if (m[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        Integer q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
        if (m[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(abs(m[k][k]));
  }
  // normalize to a divisibility chain
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = boost::multiprecision::gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& input,
                                                      std::size_t cols) {
  auto m = input;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Boundary relation of a boundary triangle as coefficients on boundary edges,
// oriented by M edge class representatives.
std::array<int, 3> triangle_relation(const Skeleton& sk, const BoundaryComplex& bc, int tri_idx,
                                     std::array<int, 3>& edges) {
  const auto& bt = bc.triangles[tri_idx];
  std::array<int, 3> coeff{};
  // [c0c1] + [c1c2] - [c0c2]; side s is opposite corner s
  static constexpr int side_sign[3] = {1, -1, 1};
  for (int s = 0; s < 3; ++s) {
    int x = bt.corners[(s + 1) % 3], y = bt.corners[(s + 2) % 3];
    int e = edge_index(x, y);
    edges[s] = bc.side_edge[tri_idx][s];
    coeff[s] = side_sign[s] * sk.edge_sign[bt.tet][e];
  }
  return coeff;
}

}  // namespace

std::map<int, std::array<Integer, 2>> oriented_labels(const Triangulation&, const Skeleton& sk,
                                                      const BoundaryComplex& bc, const EdgeLabels& labels) {
  std::map<int, std::array<Integer, 2>> out;
  if (!bc.is_one_vertex_torus()) return out;
  std::array<int, 3> bedges{};
  auto coeff = triangle_relation(sk, bc, 0, bedges);
  std::array<Slope, 3> lab;
  for (int s = 0; s < 3; ++s) {
    auto it = labels.find(bc.edge_class_of[bedges[s]]);
    if (it == labels.end()) return out;
    lab[s] = it->second;
  }
  for (int mask = 0; mask < 4; ++mask) {
    std::array<int, 3> eps{1, (mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1};
    Integer sx = 0, sy = 0;
    for (int s = 0; s < 3; ++s) {
      sx += coeff[s] * eps[s] * lab[s].x();
      sy += coeff[s] * eps[s] * lab[s].y();
    }
    if (sx != 0 || sy != 0) continue;
    for (int s = 0; s < 3; ++s)
      out[bc.edge_class_of[bedges[s]]] = {Integer(eps[s] * lab[s].x()), Integer(eps[s] * lab[s].y())};
    // the second triangle must satisfy the same relation
    std::array<int, 3> e2{};
    auto c2 = triangle_relation(sk, bc, 1, e2);
    Integer tx = 0, ty = 0;
    for (int s = 0; s < 3; ++s) {
      const auto& v = out[bc.edge_class_of[e2[s]]];
      tx += c2[s] * v[0];
      ty += c2[s] * v[1];
    }
    if (tx != 0 || ty != 0) out.clear();
    return out;
  }
  return out;
}

HomologySummary first_homology(const Triangulation& tri, const EdgeLabels* labels) {
  const Skeleton sk = skeleton(tri);
  const BoundaryComplex bc = boundary_complex(tri, sk);
  HomologySummary out;

  const int V = sk.vertex_classes, E = sk.edge_classes, F = sk.face_classes;
  IntMatrix d1(V, std::vector<Integer>(E, 0));
  for (int e = 0; e < E; ++e) {
    const auto& rep = sk.edges[e].representative;
    d1[sk.vertex_of[rep.tet][rep.b]][e] += 1;
    d1[sk.vertex_of[rep.tet][rep.a]][e] -= 1;
  }
  IntMatrix d2(E, std::vector<Integer>(F, 0));
  for (int f = 0; f < F; ++f) {
    auto [t, opp] = sk.face_rep[f];
    std::array<int, 3> v{};
    int k = 0;
    for (int x = 0; x < 4; ++x)
      if (x != opp) v[k++] = x;
    auto add = [&](int a, int b, int sign) {
      int ei = edge_index(a, b);
      d2[sk.edge_of[t][ei]][f] += sign * sk.edge_sign[t][ei];
    };
    add(v[1], v[2], 1);
    add(v[0], v[2], -1);
    add(v[0], v[1], 1);
  }
  auto inv1 = smith_invariants(d1);
  auto inv2 = smith_invariants(d2);
  out.h1_rank = E - static_cast<int>(inv1.size()) - static_cast<int>(inv2.size());
  for (const auto& d : inv2)
    if (d > 1) out.h1_torsion.push_back(d);

  out.boundary_one_vertex_torus = bc.is_one_vertex_torus();
  if (!out.boundary_one_vertex_torus || out.h1_rank == 0) return out;

  // integer cocycles: phi with phi . d2 = 0
  std::vector<std::vector<Rational>> d2t(F, std::vector<Rational>(E));
  for (int e = 0; e < E; ++e)
    for (int f = 0; f < F; ++f) d2t[f][e] = Rational(d2[e][f]);
  auto cocycles = rational_nullspace(d2t, static_cast<std::size_t>(E));

  std::array<int, 3> bedges{};
  auto coeff = triangle_relation(sk, bc, 0, bedges);
  const int ca = bc.edge_class_of[bedges[0]], cb = bc.edge_class_of[bedges[1]];
  std::vector<std::vector<Rational>> eval;
  for (const auto& phi : cocycles) eval.push_back({phi[ca], phi[cb]});
  auto ker = rational_nullspace(eval, 2);
  if (ker.size() != 1) return out;

  // clear denominators
  Integer den = boost::multiprecision::lcm(boost::multiprecision::denominator(ker[0][0]),
                                           boost::multiprecision::denominator(ker[0][1]));
  Integer alpha = boost::multiprecision::numerator(Rational(ker[0][0] * den));
  Integer beta = boost::multiprecision::numerator(Rational(ker[0][1] * den));
  Integer g = boost::multiprecision::gcd(abs(alpha), abs(beta));
  alpha /= g;
  beta /= g;

  // torus-basis vectors of the three boundary edges: a=(1,0), b=(0,1), c from the relation
  std::map<int, std::array<Integer, 2>> basis_vec;
  basis_vec[ca] = {1, 0};
  basis_vec[cb] = {0, 1};
  const int cc = bc.edge_class_of[bedges[2]];
  basis_vec[cc] = {Integer(-coeff[0] * coeff[2]), Integer(-coeff[1] * coeff[2])};
  for (const auto& [cls, v] : basis_vec) out.meridian_weight[cls] = abs(v[0] * beta - v[1] * alpha);

  if (labels) {
    auto ol = oriented_labels(tri, sk, bc, *labels);
    if (ol.empty()) throw ValidationError("edge labels are not a consistent basis of the boundary torus");
    Integer mx = alpha * ol[ca][0] + beta * ol[cb][0];
    Integer my = alpha * ol[ca][1] + beta * ol[cb][1];
    out.boundary_map_kernel_slope = primitive_slope(mx, my);
  } else {
    out.boundary_map_kernel_slope = primitive_slope(alpha, beta);
  }
  return out;
}

EdgeLabels default_labels(const Triangulation& tri) {
  const Skeleton sk = skeleton(tri);
  const BoundaryComplex bc = boundary_complex(tri, sk);
  EdgeLabels out;
  if (!bc.is_one_vertex_torus()) return out;
  std::array<int, 3> bedges{};
  auto coeff = triangle_relation(sk, bc, 0, bedges);
  out[bc.edge_class_of[bedges[0]]] = Slope(1, 0);
  out[bc.edge_class_of[bedges[1]]] = Slope(0, 1);
  out[bc.edge_class_of[bedges[2]]] = Slope(Integer(-coeff[0] * coeff[2]), Integer(-coeff[1] * coeff[2]));
  return out;
}

std::string SolidTorusReport::summary() const {
  std::ostringstream s;
  s << (candidate ? "solid torus candidate" : "not a solid torus candidate")
    << " (boundary torus: " << boundary_single_torus << ", chi=0: " << euler_zero
    << ", H1=Z: " << h1_is_z << ", primitive kernel: " << kernel_primitive
    << ", orientable: " << orientable << ")";
  return s.str();
}

SolidTorusReport solid_torus_candidate(const Triangulation& tri) {
  SolidTorusReport r;
  const Skeleton sk = skeleton(tri);
  const BoundaryComplex bc = boundary_complex(tri, sk);
  r.boundary_single_torus = bc.components == 1 && bc.euler_characteristic() == 0 && bc.orientable();
  r.euler_zero = sk.euler_characteristic() == 0;
  r.orientable = tri.is_orientable();
  auto h = first_homology(tri);
  r.h1_is_z = h.h1_rank == 1 && h.h1_torsion.empty();
  r.kernel_primitive = h.boundary_map_kernel_slope.has_value();
  r.candidate = r.boundary_single_torus && r.euler_zero && r.h1_is_z && r.kernel_primitive && r.orientable;
  return r;
}

}  // namespace solidtorus
