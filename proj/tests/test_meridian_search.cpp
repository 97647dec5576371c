#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "solidtorus/homology.hpp"
#include "solidtorus/layered.hpp"
#include "solidtorus/search.hpp"

#include <algorithm>
#include <cstdint>

using namespace solidtorus;

namespace {

SearchBudget pieces(long n) {
  SearchBudget b;
  b.max_piece_count = n;
  return b;
}

std::uint64_t fib(long k) {
  std::uint64_t a = 0, b = 1;
  for (long j = 0; j < k; ++j) {
    const auto c = a + b;
    a = b;
    b = c;
  }
  return a;
}

struct Frozen {
  long i, length, weight, pieces, budget;
};

// minimal discs found by the exhaustive search and checked against the oracles below
const Frozen kMinimal[] = {{0, 6, 6, 3, 6}, {1, 10, 11, 8, 30}, {2, 16, 19, 16, 50}, {3, 26, 32, 29, 80}};

}  // namespace

TEST_CASE("enumeration agrees with naive recursion") {
  for (long i = 0; i <= 2; ++i) {
    const auto tri = family(i).tri;
    for (long budget : {4L, 8L}) {
      auto naive = oracle::naive_enumeration(tri, budget);
      const auto lib = enumerate_admissible(tri, pieces(budget));
      CHECK(lib.complete);
      std::vector<oracle::Coords> got;
      for (const auto& v : lib.vectors)
        if (!v.is_zero()) got.push_back(v.coords);
      std::sort(naive.begin(), naive.end());
      auto sorted = got;
      std::sort(sorted.begin(), sorted.end());
      CAPTURE(i);
      CHECK(sorted == naive);
      for (std::size_t k = 1; k < lib.vectors.size(); ++k)
        CHECK(lib.vectors[k - 1].total() <= lib.vectors[k].total());
    }
  }
}

TEST_CASE("a larger budget extends the list") {
  const auto tri = family(1).tri;
  const auto small = enumerate_admissible(tri, pieces(10)).vectors;
  const auto large = enumerate_admissible(tri, pieces(16)).vectors;
  REQUIRE(small.size() <= large.size());
  CHECK(std::equal(small.begin(), small.end(), large.begin()));
}

TEST_CASE("parallel enumeration matches serial") {
  const auto tri = family(2).tri;
  auto b = pieces(20);
  const auto serial = enumerate_admissible(tri, b).vectors;
  b.jobs = 4;
  CHECK(enumerate_admissible(tri, b).vectors == serial);
}

TEST_CASE("minimal meridian discs") {
  for (const auto& f : kMinimal) {
    CAPTURE(f.i);
    const auto lt = family(f.i);
    const auto r = minimal_complexity_disc(lt.tri, pieces(f.budget), &lt.boundary_slopes);
    REQUIRE(r.disc);
    CHECK(r.status == Verdict::pass);
    CHECK(r.length_certified);
    CHECK(r.weight_certified);
    CHECK(r.disc->boundary_length == f.length);
    CHECK(r.disc->weight == f.weight);
    CHECK(r.disc->piece_count() == f.pieces);

    const auto& s = r.disc->surface;
    REQUIRE(s.components.size() == 1);
    CHECK(s.euler_characteristic == 1);
    CHECK(s.components[0].orientable);
    CHECK(oracle::corner_euler(lt.tri, r.disc->vector.coords) == 1);
    CHECK(oracle::matches(lt.tri, r.disc->vector.coords));

    // the boundary meets each boundary edge as often as the meridian must
    const auto h = first_homology(lt.tri, &lt.boundary_slopes);
    REQUIRE(h.boundary_map_kernel_slope);
    CHECK(f.length == min_curve_length(lt.triple(), *h.boundary_map_kernel_slope));
    const auto sk = skeleton(lt.tri);
    for (const auto& [edge, weight] : h.meridian_weight) {
      const auto& slot = sk.edges[edge].representative;
      CHECK(r.disc->vector.edge_weight(slot.tet, slot.a, slot.b) == weight);
    }
  }
}

TEST_CASE("small budgets are inconclusive, not wrong") {
  const auto lt = family(3);
  const auto r = minimal_complexity_disc(lt.tri, pieces(40), &lt.boundary_slopes);
  CHECK(r.status == Verdict::inconclusive);
  CHECK_FALSE(r.weight_certified);
  const auto tiny = minimal_complexity_disc(lt.tri, pieces(4), &lt.boundary_slopes);
  CHECK_FALSE(tiny.disc);
  CHECK(tiny.status == Verdict::inconclusive);
}

TEST_CASE("every disc found is a meridian disc") {
  const auto lt = family(1);
  const auto r = find_meridian_discs(lt.tri, pieces(24), &lt.boundary_slopes);
  REQUIRE_FALSE(r.discs.empty());
  CHECK(r.meridian == Slope(1, -1));
  for (std::size_t k = 0; k < r.discs.size(); ++k) {
    const auto& d = r.discs[k];
    CHECK(d.surface.components.size() == 1);
    CHECK(d.surface.euler_characteristic == 1);
    CHECK(as_meridian_disc(lt.tri, lt.boundary_slopes, r.meridian, d.vector).has_value());
    if (k) CHECK_FALSE(d < r.discs[k - 1]);
  }
  NormalVector link(2);
  for (int t = 0; t < 2; ++t)
    for (int c = 0; c < 4; ++c) link.at(t, c) = 1;
  if (check_matching(lt.tri, link).ok)
    CHECK_FALSE(as_meridian_disc(lt.tri, lt.boundary_slopes, r.meridian, link).has_value());
  CHECK_FALSE(as_meridian_disc(lt.tri, lt.boundary_slopes, r.meridian, r.discs[0].vector * 2).has_value());
}

TEST_CASE("piece count lower bound report") {
  for (const auto& f : kMinimal) {
    if (f.i > 2) break;
    CAPTURE(f.i);
    const auto rep = verify_61_1(f.i, pieces(f.budget));
    CHECK(rep.min_piece_count == f.pieces);
    CHECK(rep.x_next == static_cast<long>(fib(f.i + 3)));
    CHECK(rep.meets_bound == (f.pieces >= static_cast<long>(fib(f.i + 3))));
    CHECK(rep.search_complete);
    CHECK(rep.edge_bound);
    CHECK(rep.status == Verdict::pass);
  }
}

TEST_CASE("distance report against a direct scan") {
  for (long i = 0; i <= 40; ++i) {
    CAPTURE(i);
    const long x = static_cast<long>(fib(i + 3)), y = static_cast<long>(fib(i + 2));
    long best = -1, arg = 0;
    for (long n = -1000; n <= 1000; ++n) {
      const long d = std::abs(n * x - y);
      if (best < 0 || d <= best) {
        best = d;
        arg = n;
      }
    }
    const auto rep = verify_61_2(i, 1000);
    CHECK(rep.x_next == x);
    CHECK(rep.y_next == y);
    CHECK(rep.min_value == best);
    CHECK(rep.argmin_n == arg);
    CHECK(rep.min_value == static_cast<long>(fib(i + 1)));
    CHECK(rep.third_bound == (3 * best >= x));
    CHECK(rep.third_bound);
    CHECK(rep.status == Verdict::pass);
  }
}

TEST_CASE("precore minimum against a direct scan") {
  for (long i = 0; i <= 12; ++i) {
    CAPTURE(i);
    const auto& top = slope_seq(i + 2);
    const long tx = top.x().convert_to<long>(), ty = top.y().convert_to<long>();
    long best = -1;
    // slopes (x, y) with x + y = +-1 meet the meridian (1,-1) once
    for (long x = -1000; x <= 1000; ++x)
      for (long sign : {1L, -1L}) {
        const long d = std::abs(x * ty - (sign - x) * tx);
        if (best < 0 || d < best) best = d;
      }
    CHECK(verify_61_2(i, 1000).precore_min == best);
  }
}
