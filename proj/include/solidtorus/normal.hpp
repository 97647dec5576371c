#pragma once

#include "solidtorus/homology.hpp"
#include "solidtorus/numeric.hpp"
#include "solidtorus/slope.hpp"
#include "solidtorus/triangulation.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace solidtorus {

// Coordinate layout per tetrahedron: T0..T3 (triangle cutting off vertex v), then
// Q0 = {01|23}, Q1 = {02|13}, Q2 = {03|12}.
inline constexpr int kQuadOffset = 4;

/// Index of the quad type whose pairing contains {a,b} as one side.
int quad_of_pair(int a, int b);
/// Vertices on the side of quad q that contains vertex 0.
std::array<int, 2> quad_zero_side(int q);

struct NormalVector {
  std::vector<std::array<long, 7>> coords;

  NormalVector() = default;
  explicit NormalVector(int tets) : coords(static_cast<std::size_t>(tets), std::array<long, 7>{}) {}

  int tet_count() const { return static_cast<int>(coords.size()); }
  long& at(int tet, int k) { return coords[tet][k]; }
  long at(int tet, int k) const { return coords[tet][k]; }
  long total() const;
  bool is_zero() const { return total() == 0; }

  /// Normal arcs cutting corner v of face f of `tet` (v != f).
  long arc_count(int tet, int face, int v) const;
  /// Intersection points on the edge {a,b} of `tet`.
  long edge_weight(int tet, int a, int b) const;

  NormalVector operator+(const NormalVector& o) const;
  NormalVector operator*(long k) const;
  friend bool operator==(const NormalVector&, const NormalVector&) = default;
  friend auto operator<=>(const NormalVector&, const NormalVector&) = default;

  /// One line per tetrahedron: `tet i: T a b c d | Q p q r`.
  std::string to_text() const;
  static NormalVector from_text(const std::string& text);
  nlohmann::json to_json() const;
  static NormalVector from_json(const nlohmann::json& j);
};

class NormalError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool check_admissible(const NormalVector& v);

struct MatchingViolation {
  int face_class;
  int tet;
  int face;
  int corner;
  long here;
  long there;
};

struct MatchingResult {
  bool ok = true;
  std::vector<MatchingViolation> violations;
};

/// Throws NormalError if the vector does not have one entry per tetrahedron.
MatchingResult check_matching(const Triangulation& tri, const NormalVector& v);

/// Arc counts on the boundary triangles, indexed as in boundary_complex(); entry j of a
/// triangle counts arcs cutting its corner j.
struct NormalCurve {
  std::vector<std::array<long, 3>> arcs;

  /// Number of intersections with the boundary 1-skeleton.
  long length() const;
  bool is_zero() const { return length() == 0; }
  friend bool operator==(const NormalCurve&, const NormalCurve&) = default;
};

bool check_curve_matching(const BoundaryComplex& bc, const NormalCurve& c);

/// Splits a normal curve into its connected components.
std::vector<NormalCurve> curve_components(const BoundaryComplex& bc, const NormalCurve& c);

/// Homology class of a connected normal curve in label coordinates; nullopt when the
/// curve is trivial on the boundary torus. Throws NormalError for a disconnected or
/// non-matching curve, or when the boundary is not a labeled one-vertex torus.
std::optional<Slope> boundary_slope(const Triangulation& tri, const EdgeLabels& labels, const NormalCurve& c);

/// Sum over the three edge slopes of their intersection numbers with s.
Integer min_curve_length(const SlopeTriple& t, const Slope& s);

struct SurfaceComponent {
  long euler_characteristic = 0;
  bool orientable = true;
  std::vector<NormalCurve> boundary_curves;
  long piece_count = 0;
  long weight = 0;
  /// Discs of this component, as (tet, type, copy) with type 0..3 triangles and 4..6 quads.
  std::vector<std::array<long, 3>> discs;
  /// Transverse orientation of each disc relative to its reference normal (triangles
  /// towards their vertex, quads towards the side of vertex 0); the first disc is +1.
  /// Meaningful only for orientable components.
  std::vector<int> disc_sign;
};

struct ReconstructedSurface {
  std::vector<SurfaceComponent> components;
  long euler_characteristic = 0;
  long piece_count = 0;
  long weight = 0;
};

/// Builds the cell structure of the surface: points on edge classes, arcs in faces and
/// the discs themselves. Orientability is decided by two-sidedness, which coincides with
/// orientability inside an orientable triangulation.
/// Throws NormalError unless v is admissible and matching.
ReconstructedSurface reconstruct(const Triangulation& tri, const NormalVector& v);

/// Euler characteristic from coordinates alone: discs, minus half the disc sides plus
/// boundary arcs, plus edge-slot points divided by edge degree.
long coordinate_euler_characteristic(const Triangulation& tri, const NormalVector& v);

/// Position of a disc within a tetrahedron: type 0..3 triangle, 4..6 quad.
struct DiscRef {
  int tet;
  int type;
  long copy;
  friend auto operator<=>(const DiscRef&, const DiscRef&) = default;
};

/// The disc whose arc cuts corner v of face f at position k from the corner.
DiscRef disc_at_arc(const NormalVector& v, int tet, int face, int corner, long k);
/// Index from vertex a of the point where disc d meets edge {a,b}, or -1.
long disc_point_index(const NormalVector& v, const DiscRef& d, int a, int b);
/// The disc meeting edge {a,b} of `tet` at index k counted from a.
DiscRef disc_at_point(const NormalVector& v, int tet, int a, int b, long k);

using Point3 = std::array<Rational, 3>;
using Bary = std::array<Rational, 4>;

/// Cartesian position of barycentric coordinates in the reference tetrahedron with
/// vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1).
Point3 to_cartesian(const Bary& b);

struct GeoDisc {
  DiscRef ref;
  std::vector<Bary> corners;              // 3 or 4, in cyclic order
  std::vector<std::array<Bary, 3>> flat;  // flat triangles (2 for a square)
};

struct GeoArc {
  int tet;
  int face;
  int corner;
  long index;
  Bary from;
  Bary to;
};

struct GeometrizedSurface {
  std::vector<GeoDisc> discs;
  std::vector<GeoArc> arcs;

  /// Exact check that arcs sharing a face are pairwise disjoint.
  bool arcs_disjoint() const;
};

/// The k-th point on an edge of weight w sits at parameter (k+1)/(w+1) from either end
/// of its slot, so positions agree across glued tetrahedra. Squares are split along the
/// diagonal joining their corners on edges {a,c} and {b,d}, for pairing {a,b}|{c,d} with
/// a the smaller vertex on the side of vertex 0.
GeometrizedSurface geometrize(const Triangulation& tri, const NormalVector& v);

/// Whether two closed segments in the plane meet, exactly.
bool segments_intersect(const std::array<Rational, 2>& p1, const std::array<Rational, 2>& p2,
                        const std::array<Rational, 2>& q1, const std::array<Rational, 2>& q2);

}  // namespace solidtorus
