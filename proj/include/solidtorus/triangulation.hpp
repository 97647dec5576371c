#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace solidtorus {

/// A permutation of {0,1,2,3}; image[k] is where vertex k goes.
struct Perm4 {
  std::array<int, 4> image{0, 1, 2, 3};

  int operator[](int k) const { return image[k]; }
  Perm4 inverse() const;
  Perm4 compose(const Perm4& first) const;  // (*this) after first
  bool is_odd() const;
  bool valid() const;
  std::string digits() const;
  friend bool operator==(const Perm4&, const Perm4&) = default;
};

struct Gluing {
  int tet = -1;
  Perm4 perm;
  friend bool operator==(const Gluing&, const Gluing&) = default;
};

/// A tetrahedron-local edge {a,b} with a < b.
struct EdgeSlot {
  int tet = 0;
  int a = 0;
  int b = 1;
  friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

/// Index of the edge {a,b} of a tetrahedron in 0..5, ordered 01,02,03,12,13,23.
int edge_index(int a, int b);
std::array<int, 2> edge_vertices(int index);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tetrahedra with face gluings. Face f of a tetrahedron is the face opposite vertex f.
/// Immutable once validated; all queries are read-only.
class Triangulation {
 public:
  using FaceGluing = std::optional<Gluing>;

  Triangulation() = default;
  explicit Triangulation(int tet_count);

  /// Glues face `face` of `tet` to `target` via `perm`, and the reverse gluing.
  void glue(int tet, int face, int target, const Perm4& perm);
  /// Raw single-sided assignment; the involution is only checked by validate().
  void set_gluing(int tet, int face, FaceGluing g) { gluings_[tet][face] = g; }
  int add_tet();

  int tet_count() const { return static_cast<int>(gluings_.size()); }
  const FaceGluing& gluing(int tet, int face) const { return gluings_[tet][face]; }
  bool is_boundary(int tet, int face) const { return !gluings_[tet][face].has_value(); }

  /// Throws ValidationError when the involution, self-gluing or permutation
  /// invariants fail, or when an edge is identified with itself in reverse.
  void validate() const;

  bool is_orientable() const;

  /// Per-tetrahedron orientation signs (+1/-1) making every gluing orientation-reversing
  /// on faces; empty when non-orientable.
  std::vector<int> orientation() const;

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<std::array<FaceGluing, 4>> gluings_;
};

Triangulation parse_tri(std::string_view text);
/// Canonical text; `comments` are appended as `# ...` lines.
std::string serialize_tri(const Triangulation& tri, const std::vector<std::string>& comments = {});

/// One wedge of the star of an edge: the edge {a,b} of `tet`, entered through the
/// face opposite `d` and left through the face opposite `c`.
struct Wedge {
  int tet;
  int a, b, c, d;
};

struct EdgeClassInfo {
  int degree = 0;
  bool on_boundary = false;
  EdgeSlot representative;
};

/// Quotient cells of a triangulation, computed by union-find over the gluings.
struct Skeleton {
  int vertex_classes = 0;
  int edge_classes = 0;
  int face_classes = 0;
  int boundary_faces = 0;
  int tets = 0;

  // [tet][vertex] -> vertex class
  std::vector<std::array<int, 4>> vertex_of;
  // [tet][edge index] -> edge class, and +1/-1 for whether a->b matches the class
  // representative direction
  std::vector<std::array<int, 6>> edge_of;
  std::vector<std::array<int, 6>> edge_sign;
  // [tet][face] -> face class
  std::vector<std::array<int, 4>> face_of;

  std::vector<EdgeClassInfo> edges;
  // face class -> representative (tet, face)
  std::vector<std::array<int, 2>> face_rep;
  std::vector<bool> face_is_boundary;

  long euler_characteristic() const {
    return static_cast<long>(vertex_classes) - edge_classes + face_classes - tets;
  }
  int edge_class(const EdgeSlot& s) const { return edge_of[s.tet][edge_index(s.a, s.b)]; }
};

Skeleton skeleton(const Triangulation& tri);

/// Cyclic (interior) or linear (boundary) sequence of wedges around an edge class,
/// starting from its representative slot. For boundary edges the walk starts at a
/// wedge whose entry face is on the boundary.
std::vector<Wedge> edge_star(const Triangulation& tri, const Skeleton& sk, int edge_class);

/// A boundary triangle: boundary face `face` of `tet`; corners are the three other
/// tetrahedron vertices in increasing order. Side i is opposite corner i.
struct BoundaryTriangle {
  int tet;
  int face;
  std::array<int, 3> corners;
};

struct BoundarySide {
  int triangle = -1;
  int side = -1;
  // corner_map[j] is the corner index in `triangle` matched with corner j of this
  // triangle (only the two corners on the side are meaningful; -1 otherwise)
  std::array<int, 3> corner_map{-1, -1, -1};
};

struct BoundaryComplex {
  std::vector<BoundaryTriangle> triangles;
  std::vector<std::array<BoundarySide, 3>> neighbours;
  // boundary edge index of each side, and the M edge class it lies in
  std::vector<std::array<int, 3>> side_edge;
  std::vector<int> edge_class_of;  // boundary edge -> edge class of M
  std::vector<std::array<int, 3>> corner_vertex;  // boundary vertex class per corner
  std::vector<int> component_of;   // triangle -> component
  std::vector<int> orientation;    // +1/-1 per triangle, empty if non-orientable
  int vertices = 0;
  int edges = 0;
  int components = 0;

  long euler_characteristic() const {
    return static_cast<long>(vertices) - edges + static_cast<long>(triangles.size());
  }
  bool orientable() const { return !orientation.empty() || triangles.empty(); }
  bool is_one_vertex_torus() const {
    return components == 1 && euler_characteristic() == 0 && orientable() && vertices == 1 &&
           edges == 3;
  }
  /// Index of the triangle for boundary face (tet, face), or -1.
  int triangle_of(int tet, int face) const;
};

BoundaryComplex boundary_complex(const Triangulation& tri, const Skeleton& sk);
BoundaryComplex boundary_complex(const Triangulation& tri);

}  // namespace solidtorus
