#pragma once

#include "solidtorus/homology.hpp"
#include "solidtorus/slope.hpp"
#include "solidtorus/triangulation.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace solidtorus {

struct LayerStep {
  int layer = 0;
  Slope removed;
  Slope inserted;
};

/// A layered solid torus together with the slope carried by each boundary edge class.
struct LayeredTriangulation {
  Triangulation tri;
  EdgeLabels boundary_slopes;  // edge class -> slope
  std::vector<LayerStep> history;
  // boundary slopes in order of insertion, oldest first
  std::vector<Slope> age_order;

  SlopeTriple triple() const;
  /// Edge class carrying `s`, or -1.
  int edge_with_slope(const Slope& s) const;
};

class LayerError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One tetrahedron, face 012 glued to face 123 by 0->1, 1->2, 2->3, 3->0.
/// Boundary edges are labeled (1,0), (1,1), (2,1) in increasing order of their
/// intersection number with the homological meridian.
LayeredTriangulation base_t0();

/// Attaches a new tetrahedron across the boundary edge class `edge`. The new
/// tetrahedron's edge 01 is glued onto `edge` and its edge 23 becomes the new boundary
/// edge, which receives the flipped slope.
LayeredTriangulation layer(const LayeredTriangulation& lt, int edge);

/// T_i: i layerings of T_0, each removing the oldest boundary slope.
LayeredTriangulation family(long i);

}  // namespace solidtorus
