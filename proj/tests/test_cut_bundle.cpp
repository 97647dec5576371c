#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "solidtorus/cut.hpp"
#include "solidtorus/layered.hpp"
#include "solidtorus/search.hpp"

#include <set>

using namespace solidtorus;

namespace {

SearchBudget pieces(long n) {
  SearchBudget b;
  b.max_piece_count = n;
  return b;
}

NormalVector minimal_disc(long i, long budget) {
  const auto lt = family(i);
  const auto r = minimal_complexity_disc(lt.tri, pieces(budget), &lt.boundary_slopes);
  REQUIRE(r.disc);
  return r.disc->vector;
}

// Regions of one tetrahedron: T_v pieces at each corner (the corner region plus
// T_v - 1 slabs), then either the central region or the two quad sides and Q - 1 slabs.
long expected_regions(const NormalVector& v) {
  long n = 0;
  for (int t = 0; t < v.tet_count(); ++t) {
    for (int c = 0; c < 4; ++c) n += v.at(t, c);
    const long q = v.at(t, 4) + v.at(t, 5) + v.at(t, 6);
    n += q > 0 ? q + 1 : 1;
  }
  return n;
}

int components_by_union(const CutComplex& x) {
  oracle::Dsu d(static_cast<int>(x.regions.size()));
  for (const auto& [a, b] : x.adjacency) d.unite(a, b);
  std::set<int> roots;
  for (int r = 0; r < static_cast<int>(x.regions.size()); ++r) roots.insert(d.find(r));
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("cutting along a meridian disc leaves one ball") {
  for (long i = 0; i <= 2; ++i) {
    CAPTURE(i);
    const auto tri = family(i).tri;
    const auto d = minimal_disc(i, 50);
    const auto x = cut_along(tri, d);
    CHECK(x.components == 1);
    CHECK(x.euler_characteristic == 1);
    CHECK(static_cast<long>(x.regions.size()) == expected_regions(d));
    CHECK(components_by_union(x) == 1);
  }
}

TEST_CASE("cutting along two parallel copies") {
  for (long i = 0; i <= 1; ++i) {
    CAPTURE(i);
    const auto tri = family(i).tri;
    const auto d = minimal_disc(i, 30) * 2;
    const auto x = cut_along(tri, d);
    CHECK(x.components == 2);
    CHECK(x.euler_characteristic == 2);
    CHECK(static_cast<long>(x.regions.size()) == expected_regions(d));
    CHECK(components_by_union(x) == 2);
  }
}

TEST_CASE("cutting along the vertex link") {
  const auto tri = base_t0().tri;
  NormalVector link(1);
  for (int c = 0; c < 4; ++c) link.at(0, c) = 1;
  const auto x = cut_along(tri, link);
  CHECK(x.components == 2);
  // a ball and a solid torus
  CHECK(x.euler_characteristic == 1);
  CHECK(static_cast<long>(x.regions.size()) == 5);
}

TEST_CASE("cut rejects non-matching input") {
  const auto tri = base_t0().tri;
  NormalVector single(1);
  single.at(0, 0) = 1;
  CHECK_THROWS_AS(cut_along(tri, single), NormalError);
}

TEST_CASE("disc copies appear on both sides") {
  const auto tri = family(1).tri;
  const auto d = minimal_disc(1, 30);
  const auto x = cut_along(tri, d);
  long minus = 0, plus = 0, annulus = 0;
  for (const auto& p : x.patches) {
    CHECK(p.region >= 0);
    CHECK(p.region < static_cast<int>(x.regions.size()));
    minus += p.label == PatchLabel::d_minus;
    plus += p.label == PatchLabel::d_plus;
    annulus += p.label == PatchLabel::a;
  }
  CHECK(minus == d.total());
  CHECK(plus == d.total());
  CHECK(annulus > 0);
  CHECK(static_cast<long>(x.disc_sign.size()) == d.total());
}

TEST_CASE("parallelity bundle of minimal discs") {
  for (long i = 0; i <= 2; ++i) {
    CAPTURE(i);
    const auto lt = family(i);
    const auto d = minimal_disc(i, 50);
    const auto x = cut_along(lt.tri, d);
    const auto bundle = parallelity_bundle(lt.tri, x);
    for (const auto& c : bundle) {
      CHECK_FALSE(c.slabs.empty());
      CHECK(c.base_orientable);
    }
    for (const auto& c : bundle_prime(bundle)) {
      CHECK(c.meets_a);
      CHECK(c.meets_dminus);
      CHECK(c.meets_dplus);
    }
    long tet_slabs = 0;
    for (const auto& c : bundle)
      for (const auto& s : c.slabs) tet_slabs += s.dim == SlabDim::tet;
    long expected = 0;
    for (int t = 0; t < d.tet_count(); ++t)
      for (int k = 0; k < 7; ++k) expected += d.at(t, k) > 1 ? d.at(t, k) - 1 : 0;
    CHECK(tet_slabs == expected);

    const auto budget = pieces(50);
    const auto claims = check_claims(lt.tri, d, &lt.boundary_slopes, &budget);
    CHECK(claims.claim1);
    CHECK(claims.claim2);
    CHECK(claims.input == Minimality::minimal);
  }
}

TEST_CASE("claims on a non-minimal input are labelled as such") {
  // the minimal disc is the only normal meridian disc within reach, so the doubled disc
  // stands in for a non-minimal input
  const auto lt = family(1);
  const auto doubled = minimal_disc(1, 30) * 2;
  const auto budget = pieces(30);
  const auto claims = check_claims(lt.tri, doubled, &lt.boundary_slopes, &budget);
  CHECK(claims.input == Minimality::not_minimal);
  if (!claims.claim1 || !claims.claim2) {
    REQUIRE_FALSE(claims.details.empty());
    CHECK(claims.details.back() == "input not minimal");
  }
  CHECK(check_claims(lt.tri, doubled).input == Minimality::unknown);
}
