#pragma once

#include "solidtorus/layered.hpp"
#include "solidtorus/normal.hpp"
#include "solidtorus/search.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace solidtorus {

/// Straight segment in face `face` of tetrahedron `tet`, in that tetrahedron's
/// barycentric coordinates (the coordinate of `face` is zero).
struct PLSegment {
  int tet;
  int face;
  Bary p0;
  Bary p1;
};

/// Closed chain of segments in the 2-skeleton.
struct PLCurve {
  std::vector<PLSegment> segments;
};

class CurveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point of the triangulation in canonical form: on an edge class with a parameter
/// along its representative direction, or inside a face class in representative-side
/// coordinates.
struct CanonicalPoint {
  int dim;  // 1 edge, 2 face
  int cell;
  std::vector<Rational> coords;
  friend bool operator==(const CanonicalPoint&, const CanonicalPoint&) = default;
};

/// Throws CurveError for points at vertices or off the given face.
CanonicalPoint canonical_point(const Triangulation& tri, const Skeleton& sk, int tet, int face, const Bary& p);

/// Consecutive segments meet, the chain closes up, and no point is on a vertex.
bool is_closed(const Triangulation& tri, const PLCurve& c);

/// Closed, and segments meet only at their shared chain endpoints.
bool is_embedded(const Triangulation& tri, const PLCurve& c);

/// Chain joints lying on the 1-skeleton.
int one_skeleton_hits(const Triangulation& tri, const PLCurve& c);

/// Segments per face class, and the largest count.
struct FaceArcCount {
  std::map<int, int> per_face;
  int max = 0;
};
FaceArcCount arcs_per_face(const Triangulation& tri, const PLCurve& c);

/// Signed crossings with the surface, each disc cooriented by its transverse sign from
/// reconstruct(). Throws CurveError when a segment endpoint lies on the surface.
long algebraic_intersection(const Triangulation& tri, const PLCurve& c, const NormalVector& v);

/// Arc of a transverse curve inside one tetrahedron; `via` holds an optional interior
/// bend point used when both endpoints lie on the same face.
struct TransverseArc {
  int tet;
  Bary from;
  Bary to;
  std::optional<Bary> via;
};

struct TransverseCurve {
  std::vector<TransverseArc> arcs;
};

struct TetArcCount {
  std::map<int, int> per_tet;
  int max = 0;
  bool endpoints_in_face_interiors = true;
};
TetArcCount arcs_per_tet(const TransverseCurve& c);

/// Consecutive arcs meet across glued faces, and arcs within a tetrahedron are disjoint.
bool is_transverse_embedded(const Triangulation& tri, const TransverseCurve& c);

/// Pushes a single-segment loop off the 2-skeleton: the segment moves into the
/// tetrahedron on one side of its face and the curve goes around the edge through
/// the wedges of its star. Tries both sides and both ways round the edge; nullopt if
/// none closes up.
std::optional<TransverseCurve> push_off(const Triangulation& tri, const PLCurve& c, const Rational& eps);

enum class CurveKind { pre_core, core };

struct CurveCertificate {
  PLCurve curve;
  CurveKind kind = CurveKind::pre_core;
  MeridianDisc witness_disc;
  long algebraic_pairing = 0;
  int max_arcs_per_face = 0;
  std::optional<int> max_arcs_per_tet;
  bool pushoff_endpoints_ok = false;
  int one_skeleton_hits = 0;
  bool embedded = false;
  bool interior = false;  // disjoint from the boundary
  std::optional<Slope> hit_edge_label;  // label of the hit edge in T_0
  std::optional<TransverseCurve> pushoff;
};

/// The single-segment loop through one edge point: the first candidate among faces of
/// T_0 whose two sides lie in one edge class, placed in T_i by keeping tetrahedron 0's
/// coordinates, that is embedded, pairs to +-1 with the minimal meridian disc of T_i,
/// and for i >= 1 avoids the boundary. Throws CurveError if no candidate passes.
CurveCertificate make_61_curve(long i, const SearchBudget& b);

struct PrecoreLengthReport {
  long i = 0;
  /// Minimum over slopes meeting the homology meridian once of the curve length.
  Integer min_length;
  Integer argmin_n;
  /// Same minimum over the slopes (1,n).
  Integer min_length_unit_form;
  bool third_bound = false;  // 3 min >= x_{i+2}
  bool phi_bound = false;    // min >= phi^{i-1}
};

PrecoreLengthReport min_boundary_precore_length(long i, long window);

/// List of {face, p0, p1}; points are three rationals (as strings) on the face class
/// representative, in increasing vertex order.
nlohmann::json to_json(const Triangulation& tri, const PLCurve& c);
PLCurve pl_curve_from_json(const Triangulation& tri, const nlohmann::json& j);

}  // namespace solidtorus
