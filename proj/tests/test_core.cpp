#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "es/core.hpp"

using namespace es;
using namespace es::core;

namespace {

// Independent brute force with a different loop shape than the library:
// bounds y by z >= y instead of the remainder-fraction window.
std::set<SolutionTriple> brute(i64 n) {
  std::set<SolutionTriple> out;
  for (i64 x = 1; x <= n; ++x) {
    const i64 rem_num = 4 * x - n;  // 4/n - 1/x = rem_num / (n*x)
    if (rem_num <= 0) continue;
    const i64 rem_den = n * x;
    for (i64 y = x; rem_num * y <= 2 * rem_den; ++y) {
      const i64 den = rem_num * y - rem_den;
      if (den <= 0) continue;
      if ((rem_den * y) % den != 0) continue;
      const i64 z = rem_den * y / den;
      if (z >= y) out.insert(SolutionTriple{n, x, y, z});
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("verify pins") {
  CHECK(verify(4, 3, 3, 3));
  CHECK(verify(2, 1, 2, 2));
  CHECK(verify(193, 50, 1930, 4825));
  CHECK(verify(2521, 638, 55462, 804199));
  CHECK(verify(5, 2, 4, 20));
  CHECK_FALSE(verify(5, 2, 5, 11));
  CHECK_FALSE(verify(7, 2, 2, 2));
  CHECK_THROWS_AS(verify(0, 1, 1, 1), domain_error);
  CHECK_THROWS_AS(verify(5, -2, 4, 20), domain_error);
  CHECK_THROWS_AS(verify(5, 2, 0, 20), domain_error);
  const i64 top = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(verify(1, top, top, top), arithmetic_error);
}

TEST_CASE("verify on a triple mirrors the four-argument form") {
  const auto t = make_triple(13, 52, 4, 26);
  CHECK(t == SolutionTriple{13, 4, 26, 52});
  CHECK(verify(t));
}

TEST_CASE("make_triple sorts and validates") {
  CHECK(make_triple(9, 90, 3, 10) == SolutionTriple{9, 3, 10, 90});
  CHECK(make_triple(9, 3, 3, 3) == SolutionTriple{9, 3, 3, 3});
  CHECK_THROWS_AS(make_triple(9, 0, 1, 2), domain_error);
  CHECK_THROWS_AS(make_triple(0, 1, 1, 2), domain_error);
}

TEST_CASE("enumerate_all exact small sets") {
  CHECK(enumerate_all(2) == std::vector<SolutionTriple>{{2, 1, 2, 2}});
  CHECK(enumerate_all(4) ==
        std::vector<SolutionTriple>{{4, 2, 3, 6}, {4, 2, 4, 4}, {4, 3, 3, 3}});
  CHECK(enumerate_all(9) ==
        std::vector<SolutionTriple>{{9, 3, 10, 90},
                                    {9, 3, 12, 36},
                                    {9, 3, 18, 18},
                                    {9, 4, 6, 36},
                                    {9, 4, 9, 12},
                                    {9, 6, 6, 9}});
  CHECK_THROWS_AS(enumerate_all(1), domain_error);
  CHECK_THROWS_AS(enumerate_all(0), domain_error);
}

TEST_CASE("enumerate_all matches an independent brute force") {
  for (i64 n = 2; n <= 200; ++n) {
    const auto got = enumerate_all(n);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    const std::set<SolutionTriple> expect = brute(n);
    REQUIRE(got.size() == expect.size());
    for (const auto& t : got) {
      CHECK(expect.count(t) == 1);
      CHECK(verify(t));
      CHECK(t.x <= t.y);
      CHECK(t.y <= t.z);
    }
  }
}

TEST_CASE("gcd_class pins") {
  CHECK(gcd_class({13, 4, 26, 52}) == GcdClass::TypeII);
  CHECK(gcd_class({193, 50, 1930, 4825}) == GcdClass::TypeII);
  CHECK(gcd_class({5, 2, 4, 20}) == GcdClass::TypeI);
  CHECK(gcd_class({4, 3, 3, 3}) == GcdClass::Other);
  CHECK(gcd_class({6, 2, 12, 12}) == GcdClass::Other);
  CHECK_THROWS_AS(gcd_class({0, 1, 1, 1}), domain_error);
}

TEST_CASE("prime solutions are never class Other") {
  for (i64 p : arith::primes_in(2, 300)) {
    for (const auto& t : enumerate_all(p)) {
      CHECK(gcd_class(t) != GcdClass::Other);
    }
  }
}

TEST_CASE("match_structure pins") {
  const auto m1 = match_structure({13, 4, 26, 52});
  REQUIRE(m1.type_a.has_value());
  CHECK(*m1.type_a == std::array<i64, 3>{2, 2, 13});
  REQUIRE(m1.type_b.has_value());
  CHECK(*m1.type_b == std::array<i64, 3>{2, 1, 2});
  CHECK_FALSE(m1.type_c.has_value());

  const auto m2 = match_structure({193, 50, 1930, 4825});
  CHECK_FALSE(m2.type_a.has_value());
  REQUIRE(m2.type_b.has_value());
  CHECK(*m2.type_b == std::array<i64, 3>{5, 2, 5});
  CHECK_FALSE(m2.type_c.has_value());

  const auto m3 = match_structure({17, 5, 34, 170});
  REQUIRE(m3.type_a.has_value());
  CHECK(*m3.type_a == std::array<i64, 3>{1, 5, 34});
  CHECK_FALSE(m3.type_b.has_value());
  REQUIRE(m3.type_c.has_value());
  CHECK(*m3.type_c == std::array<i64, 3>{1, 5, 2});
}

TEST_CASE("match_structure recovers planted shapes") {
  for (i64 d = 1; d <= 6; ++d) {
    for (i64 u = 1; u <= 6; ++u) {
      for (i64 v = u + 1; v <= 7; ++v) {
        const auto a = match_structure(make_triple(1, d * u, d * v, d * u * v));
        CHECK(a.type_a.has_value());
        const i64 n = 7;
        const auto b =
            match_structure(make_triple(n, d * u * v, d * u * n, d * v * n));
        CHECK(b.type_b.has_value());
        const i64 w = 2;
        const auto c =
            match_structure(make_triple(n, u * v, u * w * n, v * w * n));
        CHECK(c.type_c.has_value());
      }
    }
  }
}

TEST_CASE("project_sextuple") {
  CHECK(project_sextuple(1, 5, 2, 1, 17) == std::array<i64, 3>{5, 34, 170});
  CHECK(project_sextuple(2, 5, 1, 5, 193) == std::array<i64, 3>{50, 1930, 4825});
  CHECK(project_sextuple(1, 1, 1, 1, 1) == std::array<i64, 3>{1, 1, 1});
  CHECK_THROWS_AS(project_sextuple(0, 1, 1, 1, 1), domain_error);
  CHECK_THROWS_AS(project_sextuple(1, 1, 1, 1, -3), domain_error);
}

TEST_CASE("sextuple projections with a unit parameter match the flat shapes") {
  // a = 1 collapses to (bd, cdn, bcdn): the divisor shape (du, dv, duv)
  // with u = b, v = cn. c = 1 collapses to (abd, adn, bdn): the shared
  // shape (duv, dun, dvn) with u = a, v = b.
  for (i64 b = 1; b <= 5; ++b) {
    for (i64 c = 1; c <= 5; ++c) {
      for (i64 d = 1; d <= 4; ++d) {
        const i64 n = 5;
        const auto t = project_sextuple(1, b, c, d, n);
        const i64 u = b, v = c * n;
        CHECK(t == std::array<i64, 3>{d * u, d * v, d * u * v});
        const auto s = project_sextuple(b, c, 1, d, n);
        CHECK(s == std::array<i64, 3>{d * b * c, d * b * n, d * c * n});
      }
    }
  }
}

}  // TEST_SUITE
