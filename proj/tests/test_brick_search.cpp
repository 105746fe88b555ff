#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <numeric>
#include <set>

#include "cuboid/brick_search.hpp"
#include "cuboid/equivalence.hpp"
#include "cuboid/report_json.hpp"
#include "oracles.hpp"

using namespace cuboid;

namespace {

std::vector<std::array<std::int64_t, 6>> flatten(const std::vector<Brick>& bricks) {
  std::vector<std::array<std::int64_t, 6>> out;
  for (const auto& b : bricks) {
    out.push_back({b.edges[0], b.edges[1], b.edges[2], b.diagonals[0], b.diagonals[1], b.diagonals[2]});
  }
  return out;
}

}  // namespace

TEST_CASE("search examples") {
  const SearchReport r250 = search_bricks(250, false);
  REQUIRE(r250.bricks.size() == 1);
  CHECK(r250.bricks[0].edges == std::array<std::int64_t, 3>{44, 117, 240});
  CHECK(r250.bricks[0].diagonals == std::array<std::int64_t, 3>{267, 244, 125});
  CHECK(r250.bricks[0].primitive);
  CHECK(r250.perfect_found.empty());

  const SearchReport r300 = search_bricks(300, false);
  REQUIRE(r300.bricks.size() == 2);
  CHECK(r300.bricks[1].edges == std::array<std::int64_t, 3>{240, 252, 275});
  CHECK(r300.bricks[1].diagonals == std::array<std::int64_t, 3>{373, 365, 348});

  CHECK(search_bricks(40, false).bricks.empty());
  CHECK(search_bricks(1, false).bricks.empty());
}

TEST_CASE("search rejects out-of-range bounds") {
  CHECK_THROWS_AS(search_bricks(0, false), DomainError);
  CHECK_THROWS_AS(search_bricks(-5, false), DomainError);
  CHECK_THROWS_AS(search_bricks(kMaxSearchEdge + 1, false), DomainError);
}

TEST_CASE("pruned search equals the naive triple loop") {
  for (std::int64_t n : {1, 50, 125, 240, 250, 275, 300}) {
    CAPTURE(n);
    CHECK(flatten(search_bricks(n, false).bricks) == oracle::naive_bricks(n));
  }
  const auto naive = oracle::naive_bricks(1000);
  CHECK(flatten(search_bricks(1000, false, 3).bricks) == naive);
  // primitive: 44-117-240, 85-132-720, 140-480-693, 160-231-792, 240-252-275;
  // multiples: 44-117-240 times 2, 3, 4 and 240-252-275 times 2, 3
  CHECK(naive.size() == 10);
}

TEST_CASE("pythagorean pairs match a direct search") {
  const std::int64_t n = 400;
  std::vector<std::array<std::int64_t, 2>> expected;
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t b = a + 1; b <= n; ++b) {
      if (oracle::is_square(oracle::sq(a) + oracle::sq(b))) expected.push_back({a, b});
    }
  }
  CHECK(pythagorean_pairs(n) == expected);
  CHECK(pythagorean_pairs(3).empty());
  CHECK(pythagorean_pairs(4).size() == 1);
}

TEST_CASE("isqrt64 and is_square64") {
  CHECK(isqrt64(0) == 0);
  CHECK(isqrt64(73225) == 270);
  CHECK(isqrt64(71289) == 267);
  CHECK(is_square64(71289));
  CHECK_FALSE(is_square64(73225));
  const std::int64_t big = 3'037'000'499;  // floor(sqrt(2^63 - 1))
  CHECK(isqrt64(big * big) == big);
  CHECK(isqrt64(big * big - 1) == big - 1);
  CHECK(isqrt64(std::numeric_limits<std::int64_t>::max()) == big);
  for (std::int64_t v = 0; v < 100000; ++v) {
    REQUIRE(isqrt64(v) == oracle::isqrt_bisect(v));
    REQUIRE(is_square64(v) == oracle::is_square(v));
  }
}

TEST_CASE("search properties") {
  const SearchReport r = search_bricks(2000, false);
  std::set<std::array<std::int64_t, 3>> edges;
  for (const auto& b : r.bricks) edges.insert(b.edges);
  for (const auto& b : r.bricks) {
    CHECK(b.edges[0] < b.edges[1]);
    CHECK(b.edges[1] < b.edges[2]);
    CHECK(b.edges[2] <= 2000);
    const CuboidTuple t = b.to_tuple();
    CHECK(satisfies_cuboid(t, SystemKind::Euler));
    CHECK(satisfies_factor(t, SystemKind::Euler));
    const std::int64_t g = std::gcd(std::gcd(b.edges[0], b.edges[1]), b.edges[2]);
    CHECK(b.primitive == (g == 1));
    // scale closure
    for (std::int64_t k = 2; k * b.edges[2] <= 2000; ++k) {
      CHECK(edges.count({k * b.edges[0], k * b.edges[1], k * b.edges[2]}) == 1);
    }
  }
  CHECK(std::is_sorted(r.bricks.begin(), r.bricks.end()));

  const SearchReport prim = search_bricks(2000, true);
  std::vector<Brick> expected;
  for (const auto& b : r.bricks) {
    if (b.primitive) expected.push_back(b);
  }
  CHECK(prim.bricks == expected);
  CHECK(prim.primitive_only);
}

TEST_CASE("search output does not depend on the job count") {
  const std::string one = search_report_to_json(search_bricks(3000, false, 1)).dump();
  for (unsigned jobs : {2u, 4u, 16u}) CHECK(search_report_to_json(search_bricks(3000, false, jobs)).dump() == one);
}

TEST_CASE("perfect cuboid absence") {
  const PerfectAbsence a = check_perfect_absence(500);
  CHECK(a.absent);
  CHECK_FALSE(a.witness.has_value());
  CHECK(a.bricks_checked == 3);  // 44-117-240, 88-234-480, 240-252-275
  // 44^2 + 117^2 + 240^2 = 73225 lies strictly between 270^2 and 271^2
  CHECK(oracle::sq(44) + oracle::sq(117) + oracle::sq(240) == 73225);
  CHECK_FALSE(oracle::is_square(73225));
  CHECK_FALSE(oracle::is_square(oracle::sq(240) + oracle::sq(252) + oracle::sq(275)));
  CHECK(check_perfect_absence(1).absent);
  CHECK(check_perfect_absence(1).bricks_checked == 0);

  // a fabricated brick with an integer space diagonal is reported
  Brick fake;
  fake.edges = {1, 2, 2};
  const PerfectAbsence f = check_perfect_absence(std::vector<Brick>{fake});
  CHECK_FALSE(f.absent);
  CHECK(f.witness == fake);
}

TEST_CASE("csv output") {
  const std::string csv = search_report_to_csv(search_bricks(250, false));
  CHECK(csv == "x1,x2,x3,d1,d2,d3,primitive\n44,117,240,267,244,125,true\n");
}
