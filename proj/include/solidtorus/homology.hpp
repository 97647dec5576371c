#pragma once

#include "solidtorus/numeric.hpp"
#include "solidtorus/slope.hpp"
#include "solidtorus/triangulation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace solidtorus {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Nonzero invariant factors of an integer matrix (Smith normal form diagonal).
std::vector<Integer> smith_invariants(IntMatrix m);

/// Basis of the rational null space {x : m x = 0}.
std::vector<std::vector<Rational>> rational_nullspace(const std::vector<std::vector<Rational>>& m, std::size_t cols);

/// Edge class -> slope label for the boundary edges.
using EdgeLabels = std::map<int, Slope>;

struct HomologySummary {
  int h1_rank = 0;
  std::vector<Integer> h1_torsion;
  /// Generator of ker(H1(dM) -> H1(M)/torsion), in label coordinates when labels were
  /// supplied, otherwise in the basis of the first two boundary edges.
  std::optional<Slope> boundary_map_kernel_slope;
  /// Meridian intersection count of each boundary edge class, when a kernel exists.
  std::map<int, Integer> meridian_weight;
  bool boundary_one_vertex_torus = false;
};

/// Cellular H1 of the quotient complex, with exact integer reduction.
/// Throws ValidationError if labels are given but are not a consistent coordinate
/// system on the boundary torus.
HomologySummary first_homology(const Triangulation& tri, const EdgeLabels* labels = nullptr);

/// Oriented label vectors (x,y) for each boundary edge class, signed so that every
/// boundary triangle relation holds. Empty map if no consistent signing exists.
std::map<int, std::array<Integer, 2>> oriented_labels(const Triangulation& tri, const Skeleton& sk,
                                                      const BoundaryComplex& bc, const EdgeLabels& labels);

/// Labels (1,0) and (0,1) on two boundary edge classes and the induced primitive class
/// on the third. In these labels first_homology reports the same kernel slope as without
/// labels. Empty unless the boundary is a one-vertex torus.
EdgeLabels default_labels(const Triangulation& tri);

struct SolidTorusReport {
  bool candidate = false;
  bool boundary_single_torus = false;
  bool euler_zero = false;
  bool h1_is_z = false;
  bool kernel_primitive = false;
  bool orientable = false;
  std::string summary() const;
};

/// Necessary conditions only: one torus boundary component, chi(M)=0, H1(M)=Z and a
/// primitive boundary kernel.
SolidTorusReport solid_torus_candidate(const Triangulation& tri);

}  // namespace solidtorus
