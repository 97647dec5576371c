#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solidtorus/homology.hpp"
#include "solidtorus/layered.hpp"

using namespace solidtorus;

namespace {

SlopeTriple seq_triple(long i) { return SlopeTriple(slope_seq(i), slope_seq(i + 1), slope_seq(i + 2)); }

}  // namespace

TEST_CASE("base triangulation") {
  const auto t0 = base_t0();
  CHECK(t0.tri.tet_count() == 1);
  CHECK(t0.triple() == SlopeTriple(Slope(1, 0), Slope(1, 1), Slope(2, 1)));
  CHECK(boundary_complex(t0.tri).is_one_vertex_torus());
  CHECK(solid_torus_candidate(t0.tri).candidate);
  CHECK(family(0).tri == t0.tri);
}

TEST_CASE("layering realizes the flip") {
  const auto t0 = base_t0();
  const auto t1 = layer(t0, t0.edge_with_slope(Slope(1, 0)));
  CHECK(t1.tri.tet_count() == 2);
  CHECK(t1.triple() == SlopeTriple(Slope(1, 1), Slope(2, 1), Slope(3, 2)));
  const auto t2 = layer(t1, t1.edge_with_slope(Slope(1, 1)));
  CHECK(t2.triple() == SlopeTriple(Slope(2, 1), Slope(3, 2), Slope(5, 3)));
  REQUIRE(t2.history.size() == 2);
  CHECK(t2.history[1].removed == Slope(1, 1));
  CHECK(t2.history[1].inserted == Slope(5, 3));
}

TEST_CASE("layering twice on the new edge backtracks the triple") {
  const auto t0 = base_t0();
  const auto t1 = layer(t0, t0.edge_with_slope(Slope(1, 0)));
  const auto back = layer(t1, t1.edge_with_slope(Slope(3, 2)));
  CHECK(back.triple() == t0.triple());
  CHECK(back.tri.tet_count() == 3);
  CHECK(boundary_complex(back.tri).is_one_vertex_torus());
}

TEST_CASE("layering errors") {
  const auto t1 = family(1);
  const Skeleton sk = skeleton(t1.tri);
  int interior = -1;
  for (int e = 0; e < sk.edge_classes; ++e)
    if (!sk.edges[e].on_boundary) interior = e;
  REQUIRE(interior >= 0);
  CHECK_THROWS_AS(layer(t1, interior), LayerError);
  CHECK_THROWS_AS(family(-1), std::invalid_argument);
}

TEST_CASE("family members") {
  CHECK(family(2).triple() == SlopeTriple(Slope(2, 1), Slope(3, 2), Slope(5, 3)));
  CHECK(family(10).tri.tet_count() == 11);
  for (long i = 0; i <= 12; ++i) {
    const auto lt = family(i);
    CHECK(lt.tri.tet_count() == i + 1);
    CHECK(lt.triple() == seq_triple(i));
    CHECK(lt.tri.is_orientable());
    CHECK(boundary_complex(lt.tri).is_one_vertex_torus());
    CHECK(solid_torus_candidate(lt.tri).candidate);
    CHECK(lt.edge_with_slope(slope_seq(i + 2)) >= 0);
  }
}

TEST_CASE("family(i+1) is family(i) layered on the oldest slope") {
  for (long i = 0; i < 8; ++i) {
    const auto lt = family(i);
    const auto next = layer(lt, lt.edge_with_slope(slope_seq(i)));
    CHECK(next.tri == family(i + 1).tri);
    CHECK(next.triple() == family(i + 1).triple());
  }
}

TEST_CASE("labels are ordered by meridian weight") {
  // each label (x,y) meets the homology meridian x+y times
  for (long i = 0; i <= 10; ++i) {
    const auto lt = family(i);
    const auto h = first_homology(lt.tri, &lt.boundary_slopes);
    REQUIRE(h.meridian_weight.size() == 3);
    for (const auto& [cls, s] : lt.boundary_slopes) CHECK(h.meridian_weight.at(cls) == s.x() + s.y());
  }
}
