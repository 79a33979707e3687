#include <doctest.h>

#include <algorithm>

#include "es/core.hpp"
#include "es/type_c.hpp"

using namespace es;
using namespace es::type_c;

namespace {

bool has_structural_c(i64 n) {
  for (const auto& t : core::enumerate_all(n)) {
    if (core::match_structure(t).type_c) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("type_c") {

TEST_CASE("find_witness pins") {
  auto w = find_witness(5);
  REQUIRE(w.has_value());
  CHECK(w->t == 0);
  CHECK(w->d == 1);
  CHECK(w->m == 1);
  CHECK(w->v == 2);
  CHECK(to_triple(*w) == core::SolutionTriple{5, 2, 5, 10});

  w = find_witness(17);
  REQUIRE(w.has_value());
  CHECK(w->t == 0);
  CHECK(w->d == 1);
  CHECK(w->m == 2);
  CHECK(w->v == 5);
  CHECK(to_triple(*w) == core::SolutionTriple{17, 5, 34, 170});

  w = find_witness(2521);
  REQUIRE(w.has_value());
  CHECK(w->t == 13);
  CHECK(w->d == 4);
  CHECK(w->m == 3);
  CHECK(w->v == 161);
  CHECK(core::verify(to_triple(*w)));

  w = find_witness(23929);
  REQUIRE(w.has_value());
  CHECK(w->t == 1);
  CHECK(w->d == 1);
  CHECK(w->m == 855);
  CHECK(w->v == 5984);

  CHECK_FALSE(find_witness(9).has_value());
  CHECK_FALSE(find_witness(13).has_value());
  CHECK_FALSE(find_witness(193).has_value());
  CHECK_FALSE(find_witness(25).has_value());
}

TEST_CASE("find_witness rejects wrong residues") {
  CHECK_THROWS_AS(find_witness(4), domain_error);
  CHECK_THROWS_AS(find_witness(3), domain_error);
  CHECK_THROWS_AS(find_witness(1), domain_error);
  CHECK_THROWS_AS(find_witness(-9), domain_error);
}

TEST_CASE("witness invariants over a sweep") {
  for (i64 n = 5; n <= 400; n += 4) {
    const auto w = find_witness(n);
    if (!w) continue;
    const i64 target = w->k + 1 + w->t;
    CHECK(target % w->d == 0);
    const i64 b = target / w->d;
    CHECK((w->d + b) % (3 + 4 * w->t) == 0);
    CHECK(w->m == (w->d + b) / (3 + 4 * w->t));
    const i64 mod = 4 * w->d * w->m - 1;
    // -n = 4d^2 (mod 4dm-1)
    CHECK((n + 4 * w->d * w->d) % mod == 0);
    CHECK(w->v == (w->d + n * w->m) / mod);
    const auto t = to_triple(*w);
    CHECK(core::verify(t));
    const auto m = core::match_structure(t);
    CHECK(m.type_c.has_value());
  }
}

TEST_CASE("witness presence matches the structural shape") {
  for (i64 n = 5; n <= 300; n += 4) {
    CHECK(find_witness(n).has_value() == has_structural_c(n));
  }
}

TEST_CASE("qr_filter pins") {
  CHECK(qr_filter(5, 1) == std::vector<i64>{1});
  CHECK(qr_filter(17, 2) == std::vector<i64>{1, 2});
  CHECK(qr_filter(13, 2).empty());
  CHECK(qr_filter(13, 8).empty());
  CHECK(qr_filter(17, 10) == std::vector<i64>{1, 2, 6, 10});
  CHECK_THROWS_AS(qr_filter(0, 5), domain_error);
  CHECK_THROWS_AS(qr_filter(5, 0), domain_error);
}

TEST_CASE("every witness u = d*m passes the filter") {
  for (i64 n = 5; n <= 300; n += 4) {
    const auto w = find_witness(n);
    if (!w) continue;
    const i64 u = w->d * w->m;
    const auto admissible = qr_filter(n, u);
    CHECK(std::find(admissible.begin(), admissible.end(), u) != admissible.end());
  }
}

}  // TEST_SUITE
