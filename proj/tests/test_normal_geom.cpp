#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curve_scan.hpp"
#include "oracles.hpp"
#include "solidtorus/homology.hpp"
#include "solidtorus/layered.hpp"
#include "solidtorus/normal.hpp"
#include "solidtorus/search.hpp"

#include <random>

using namespace solidtorus;

namespace {

NormalVector vertex_link_t0() {
  NormalVector v(1);
  for (int k = 0; k < 4; ++k) v.at(0, k) = 1;
  return v;
}

NormalVector minimal_disc(long i, long pieces) {
  SearchBudget b;
  b.max_piece_count = pieces;
  const auto lt = family(i);
  const auto r = minimal_complexity_disc(lt.tri, b, &lt.boundary_slopes);
  REQUIRE(r.disc);
  return r.disc->vector;
}

oracle::Vec to_vec(const Slope& s) { return {s.x().convert_to<long>(), s.y().convert_to<long>()}; }

std::array<oracle::Vec, 3> triple_vecs(const LayeredTriangulation& lt) {
  const auto& s = lt.triple().slopes();
  return {to_vec(s[0]), to_vec(s[1]), to_vec(s[2])};
}

long gcd_long(long a, long b) { return std::gcd(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("admissibility") {
  CHECK(check_admissible(NormalVector(2)));
  NormalVector two_quads(1);
  two_quads.at(0, 4) = 1;
  two_quads.at(0, 5) = 1;
  CHECK_FALSE(check_admissible(two_quads));
  CHECK(check_admissible(vertex_link_t0()));
  NormalVector one_quad(1);
  one_quad.at(0, 6) = 3;
  CHECK(check_admissible(one_quad));
}

TEST_CASE("matching equations") {
  const auto t0 = base_t0().tri;
  CHECK(check_matching(t0, vertex_link_t0()).ok);
  NormalVector single(1);
  single.at(0, 0) = 1;
  const auto r = check_matching(t0, single);
  CHECK_FALSE(r.ok);
  REQUIRE_FALSE(r.violations.empty());
  const auto& viol = r.violations.front();
  CHECK(viol.here != viol.there);
  CHECK_FALSE(oracle::matches(t0, single.coords));
  CHECK_THROWS_AS(check_matching(t0, NormalVector(2)), NormalError);
}

TEST_CASE("arc counts and edge weights agree with the corner formulas") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> count(0, 5);
  for (int round = 0; round < 200; ++round) {
    NormalVector v(2);
    for (int t = 0; t < 2; ++t) {
      for (int k = 0; k < 4; ++k) v.at(t, k) = count(rng);
      v.at(t, 4 + round % 3) = count(rng);
    }
    for (int t = 0; t < 2; ++t)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (a == b) continue;
          CHECK(v.edge_weight(t, a, b) == oracle::points_on(v.coords, t, std::min(a, b), std::max(a, b)));
          CHECK(v.arc_count(t, a, b) == oracle::arcs_at(v.coords, t, a, b));
        }
  }
}

TEST_CASE("vertex link reconstruction") {
  const auto t0 = base_t0();
  const auto link = vertex_link_t0();
  const auto s = reconstruct(t0.tri, link);
  REQUIRE(s.components.size() == 1);
  CHECK(s.euler_characteristic == 1);
  CHECK(s.components[0].orientable);
  REQUIRE(s.components[0].boundary_curves.size() == 1);
  CHECK_FALSE(boundary_slope(t0.tri, t0.boundary_slopes, s.components[0].boundary_curves[0]).has_value());
  CHECK(s.components[0].boundary_curves[0].length() == 6);

  const auto doubled = reconstruct(t0.tri, link * 2);
  CHECK(doubled.components.size() == 2);
  CHECK(doubled.euler_characteristic == 2);
  CHECK(doubled.piece_count == 2 * s.piece_count);
  CHECK(doubled.weight == 2 * s.weight);
}

TEST_CASE("euler characteristic against corner counting on small vectors") {
  for (long i = 0; i <= 2; ++i) {
    const auto tri = family(i).tri;
    const auto vectors = oracle::naive_enumeration(tri, 8);
    CAPTURE(i);
    CHECK_FALSE(vectors.empty());
    for (const auto& coords : vectors) {
      NormalVector v(tri.tet_count());
      v.coords = coords;
      REQUIRE(check_admissible(v));
      REQUIRE(check_matching(tri, v).ok);
      const long expected = oracle::corner_euler(tri, coords);
      CHECK(reconstruct(tri, v).euler_characteristic == expected);
      CHECK(coordinate_euler_characteristic(tri, v) == expected);
    }
  }
}

TEST_CASE("weight and piece count are additive") {
  const auto tri = family(1).tri;
  const auto d = minimal_disc(1, 30);
  const auto link = NormalVector::from_text("tet 0: T 1 1 1 1 | Q 0 0 0\ntet 1: T 1 1 1 1 | Q 0 0 0\n");
  if (check_matching(tri, link).ok) {
    const auto a = reconstruct(tri, d), b = reconstruct(tri, link), ab = reconstruct(tri, d + link);
    CHECK(ab.weight == a.weight + b.weight);
    CHECK(ab.piece_count == a.piece_count + b.piece_count);
    CHECK(ab.euler_characteristic == a.euler_characteristic + b.euler_characteristic);
  }
  const auto a = reconstruct(tri, d), aa = reconstruct(tri, d * 3);
  CHECK(aa.weight == 3 * a.weight);
  CHECK(aa.piece_count == 3 * a.piece_count);
  CHECK(aa.components.size() == 3);
}

TEST_CASE("minimal disc boundary is the homology meridian") {
  for (long i = 0; i <= 1; ++i) {
    const auto lt = family(i);
    const auto s = reconstruct(lt.tri, minimal_disc(i, 30));
    REQUIRE(s.components.size() == 1);
    REQUIRE(s.components[0].boundary_curves.size() == 1);
    const auto slope = boundary_slope(lt.tri, lt.boundary_slopes, s.components[0].boundary_curves[0]);
    REQUIRE(slope);
    CHECK(*slope == *first_homology(lt.tri, &lt.boundary_slopes).boundary_map_kernel_slope);
    CHECK(*slope == Slope(1, -1));
  }
}

TEST_CASE("curve length formula") {
  const auto t0 = base_t0().triple();
  CHECK(min_curve_length(t0, Slope(0, 1)) == 4);
  CHECK(min_curve_length(t0, Slope(1, 0)) == 0 + 1 + 1);
  for (const auto& e : t0.slopes()) {
    Integer others = 0;
    for (const auto& f : t0.slopes())
      if (!(f == e)) others += 1;
    CHECK(min_curve_length(t0, e) == others);
  }
  for (long i = 0; i <= 20; ++i) {
    const SlopeTriple t(slope_seq(i), slope_seq(i + 1), slope_seq(i + 2));
    CHECK(min_curve_length(t, Slope(0, 1)) == slope_seq(i).x() + slope_seq(i + 1).x() + slope_seq(i + 2).x());
  }
}

TEST_CASE("curve length formula is the minimum over traced curves") {
  for (long i = 0; i <= 1; ++i) {
    const auto lt = family(i);
    const auto model = oracle::model_min_lengths(triple_vecs(lt), 40);
    const auto real = scan::boundary_min_lengths(lt, 40);
    for (long x = 0; x <= 4; ++x)
      for (long y = -4; y <= 4; ++y) {
        if (gcd_long(x, y) != 1 || (x == 0 && y != 1)) continue;
        const Slope s(x, y);
        const long formula = min_curve_length(lt.triple(), s).convert_to<long>();
        if (formula > 40) continue;
        CAPTURE(i);
        CAPTURE(s.str());
        REQUIRE(model.count({x, y}));
        REQUIRE(real.count({x, y}));
        CHECK(model.at({x, y}) == formula);
        CHECK(real.at({x, y}) == formula);
      }
  }
}

TEST_CASE("a traced (1,1) curve on the base boundary") {
  const auto t0 = base_t0();
  const auto real = scan::boundary_min_lengths(t0, 10);
  REQUIRE(real.count({1, 1}));
  CHECK(real.at({1, 1}) == min_curve_length(t0.triple(), Slope(1, 1)));
  const auto model = oracle::model_min_lengths(triple_vecs(t0), 10);
  REQUIRE(model.count({1, 1}));
  CHECK(model.at({1, 1}) == real.at({1, 1}));
}

TEST_CASE("geometric realization") {
  const auto t0 = base_t0().tri;
  const auto g = geometrize(t0, vertex_link_t0());
  CHECK(g.discs.size() == 4);
  for (const auto& d : g.discs) {
    REQUIRE(d.corners.size() == 3);
    for (const auto& c : d.corners) CHECK(c[d.ref.type] == Rational(2, 3));
  }
  CHECK(g.arcs_disjoint());
  CHECK(geometrize(t0, vertex_link_t0() * 2).arcs_disjoint());
  for (long i = 0; i <= 2; ++i) {
    const auto tri = family(i).tri;
    const auto d = minimal_disc(i, 50);
    CHECK(geometrize(tri, d).arcs_disjoint());
    CHECK(geometrize(tri, d * 2).arcs_disjoint());
  }
}

TEST_CASE("segment intersection") {
  using P = std::array<Rational, 2>;
  CHECK(segments_intersect(P{0, 0}, P{2, 2}, P{0, 2}, P{2, 0}));
  CHECK_FALSE(segments_intersect(P{0, 0}, P{1, 0}, P{0, 1}, P{1, 1}));
  CHECK(segments_intersect(P{0, 0}, P{1, 0}, P{1, 0}, P{1, 1}));
  CHECK(segments_intersect(P{0, 0}, P{2, 0}, P{1, 0}, P{3, 0}));
  CHECK_FALSE(segments_intersect(P{0, 0}, P{1, 0}, P{2, 0}, P{3, 0}));
}

TEST_CASE("text and JSON round trips") {
  const auto d = minimal_disc(2, 50);
  CHECK(NormalVector::from_text(d.to_text()) == d);
  CHECK(NormalVector::from_json(d.to_json()) == d);
  CHECK_THROWS_AS(NormalVector::from_text("tet 0: T 1 2 3\n"), NormalError);
  CHECK_THROWS_AS(NormalVector::from_text("tet 1: T 0 0 0 0 | Q 0 0 0\n"), NormalError);
  CHECK_THROWS_AS(NormalVector::from_json(nlohmann::json::parse("[[1,2,3]]")), NormalError);
  CHECK_THROWS_AS(NormalVector::from_json(nlohmann::json::parse("[[1,2,3,4,5,6,-7]]")), NormalError);
  CHECK_THROWS_AS(NormalVector::from_json(nlohmann::json::parse("{}")), NormalError);
}
