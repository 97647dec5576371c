#pragma once

#include "solidtorus/normal.hpp"
#include "solidtorus/search.hpp"
#include "solidtorus/triangulation.hpp"

#include <string>
#include <vector>

namespace solidtorus {

enum class RegionKind { corner, triangle_slab, quad_slab, side, central };

/// A piece of a tetrahedron left over after removing the surface.
/// corner and triangle_slab use `vertex`; side uses `side` (0: the quad side holding
/// vertex 0, 1: the other side); slabs use `index` for the lower disc copy.
struct Region {
  int tet = 0;
  RegionKind kind = RegionKind::central;
  int vertex = -1;
  int side = -1;
  long index = 0;
};

enum class PatchLabel { a, d_minus, d_plus };

struct BoundaryPatch {
  PatchLabel label;
  int region;
};

struct CutComplex {
  NormalVector vector;
  std::vector<Region> regions;
  /// Regions of different tetrahedra (or the same one) meeting across a piece of an
  /// interior face.
  std::vector<std::pair<int, int>> adjacency;
  std::vector<BoundaryPatch> patches;
  std::vector<int> component_of;  // region -> component
  int components = 0;
  long euler_characteristic = 0;
  /// Transverse sign of each surface disc, keyed by (tet, type, copy).
  std::map<DiscRef, int> disc_sign;
};

/// Cuts along any admissible matching surface; a meridian disc of a solid torus yields
/// one ball. Throws NormalError unless the surface is two-sided.
CutComplex cut_along(const Triangulation& tri, const NormalVector& v);

enum class SlabDim { edge = 1, face = 2, tet = 3 };

/// Product region between consecutive parallel pieces of the surface: points on an
/// edge class, arcs at one corner of a face class, or same-type discs in a tetrahedron.
struct Slab {
  SlabDim dim;
  int cell;     // edge class, face class, or tetrahedron
  int corner;   // face corner (representative side) or disc type in a tetrahedron
  long index;   // lower piece
};

struct BundleComponent {
  std::vector<Slab> slabs;
  long base_euler = 0;
  bool base_orientable = true;
  bool meets_dminus = false;
  bool meets_dplus = false;
  bool meets_a = false;
};

std::vector<BundleComponent> parallelity_bundle(const Triangulation& tri, const CutComplex& x);

/// Components of the bundle that meet the annulus A.
std::vector<BundleComponent> bundle_prime(const std::vector<BundleComponent>& components);

enum class Minimality { minimal, not_minimal, unknown };

struct ClaimReport {
  bool claim1 = false;  // every bundle component is a product
  bool claim2 = false;  // every component meeting A meets both disc copies
  Minimality input = Minimality::unknown;
  std::vector<std::string> details;
};

/// With a budget, the input is compared against minimal_complexity_disc first so that
/// a failing claim on a non-minimal input is reported as such.
ClaimReport check_claims(const Triangulation& tri, const NormalVector& v, const EdgeLabels* labels = nullptr,
                         const SearchBudget* verify_minimal = nullptr);

}  // namespace solidtorus
