#include <doctest.h>

#include "es/core.hpp"
#include "es/type_b.hpp"

using namespace es;
using namespace es::type_b;

namespace {

bool has_structural_b(i64 n) {
  for (const auto& t : core::enumerate_all(n)) {
    if (core::match_structure(t).type_b) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("type_b") {

TEST_CASE("congruence_search pins") {
  auto w = congruence_search(193);
  REQUIRE(w.has_value());
  CHECK(w->d == 2);
  CHECK(w->n == 2);
  CHECK(w->u == 13);
  CHECK(to_triple(*w) == core::SolutionTriple{193, 52, 772, 5018});

  w = congruence_search(2521);
  REQUIRE(w.has_value());
  CHECK(w->d == 11);
  CHECK(w->n == 2);
  CHECK(w->u == 29);
  CHECK(to_triple(*w) == core::SolutionTriple{2521, 638, 55462, 804199});

  w = congruence_search(6);
  REQUIRE(w.has_value());
  CHECK(w->d == 2);
  CHECK(w->n == 1);
  CHECK(w->u == 1);
  CHECK(to_triple(*w) == core::SolutionTriple{6, 2, 12, 12});

  w = congruence_search(2);
  REQUIRE(w.has_value());
  CHECK(w->d == 1);
  CHECK(w->n == 1);
  CHECK(w->u == 1);
  CHECK(to_triple(*w) == core::SolutionTriple{2, 1, 2, 2});

  w = congruence_search(66529);
  REQUIRE(w.has_value());
  CHECK(w->d == 2);
  CHECK(w->n == 5);
  CHECK(w->u == 1706);

  CHECK_FALSE(congruence_search(15).has_value());
  CHECK_FALSE(congruence_search(7).has_value());
  CHECK_THROWS_AS(congruence_search(1), domain_error);
  CHECK_THROWS_AS(congruence_search(0), domain_error);
}

TEST_CASE("factor_search pins") {
  auto fw = factor_search(193);
  REQUIRE(fw.has_value());
  CHECK(fw->k == 48);
  CHECK(fw->t == 1);
  CHECK(fw->a_div == 2);
  CHECK(fw->b_div == 5);
  CHECK(fw->d == 5);

  fw = factor_search(5);
  REQUIRE(fw.has_value());
  CHECK(fw->t == 0);
  CHECK(fw->a_div == 1);
  CHECK(fw->b_div == 2);
  CHECK(fw->d == 1);

  fw = factor_search(13);
  REQUIRE(fw.has_value());
  CHECK(fw->t == 0);
  CHECK(fw->a_div == 1);
  CHECK(fw->b_div == 2);
  CHECK(fw->d == 2);

  fw = factor_search(2521);
  REQUIRE(fw.has_value());
  CHECK(fw->k == 630);
  CHECK(fw->t == 7);
  CHECK(fw->a_div == 2);
  CHECK(fw->b_div == 29);
  CHECK(fw->d == 11);

  fw = factor_search(66529);
  REQUIRE(fw.has_value());
  CHECK(fw->t == 7);
  CHECK(fw->a_div == 5);
  CHECK(fw->b_div == 26);
  CHECK(fw->d == 128);

  CHECK_FALSE(factor_search(25).has_value());
  CHECK_FALSE(factor_search(23929).has_value());
  CHECK_THROWS_AS(factor_search(4), domain_error);
  CHECK_THROWS_AS(factor_search(3), domain_error);
  CHECK_THROWS_AS(factor_search(1), domain_error);
}

TEST_CASE("witness_from_factor matches the congruence form") {
  const auto fw = factor_search(193);
  REQUIRE(fw.has_value());
  const auto w = witness_from_factor(193, *fw);
  CHECK(w.d == 5);
  CHECK(w.n == 2);
  CHECK(w.u == 5);
  CHECK(to_triple(w) == core::SolutionTriple{193, 50, 1930, 4825});

  const auto fw2 = factor_search(2521);
  REQUIRE(fw2.has_value());
  const auto w2 = witness_from_factor(2521, *fw2);
  CHECK(w2.d == 11);
  CHECK(w2.n == 2);
  CHECK(w2.u == 29);
  CHECK(to_triple(w2) == core::SolutionTriple{2521, 638, 55462, 804199});

  const auto fw3 = factor_search(5);
  REQUIRE(fw3.has_value());
  const auto w3 = witness_from_factor(5, *fw3);
  CHECK(w3.d == 1);
  CHECK(w3.n == 1);
  CHECK(w3.u == 2);
  CHECK(to_triple(w3) == core::SolutionTriple{5, 2, 5, 10});
}

TEST_CASE("factor witnesses satisfy their defining identities") {
  for (i64 a = 5; a <= 600; a += 4) {
    const auto fw = factor_search(a);
    const auto cw = congruence_search(a);
    CHECK(fw.has_value() == cw.has_value());
    if (!fw) continue;
    CHECK(fw->a_div < fw->b_div);
    CHECK(fw->a_div + fw->b_div == 3 + 4 * fw->t);
    CHECK(fw->a_div * fw->b_div * fw->d == fw->k + 1 + fw->t);
    const auto w = witness_from_factor(a, *fw);
    CHECK((a + w.n) % (4 * w.d * w.n - 1) == 0);
    CHECK(core::verify(to_triple(w)));
  }
}

TEST_CASE("witness presence is equivalent to the shared shape for primes") {
  for (i64 p : arith::primes_in(5, 300)) {
    if (p % 4 != 1) continue;
    CHECK(factor_search(p).has_value() == has_structural_b(p));
  }
}

TEST_CASE("odd squares never carry the shape") {
  for (i64 m = 3; m <= 45; m += 2) {
    CHECK_FALSE(factor_search(m * m).has_value());
  }
}

TEST_CASE("dual congruence pins") {
  auto dc = dual_witness(2521, 11, 2);
  CHECK(dc.n2 == 29);
  CHECK(dc.modulus2 == 1275);
  CHECK_FALSE(arith::is_prime(87));    // 4*11*2-1
  CHECK_FALSE(arith::is_prime(1275));  // 4*11*29-1

  dc = dual_witness(193, 5, 2);
  CHECK(dc.n2 == 5);
  CHECK(dc.modulus2 == 99);
  dc = dual_witness(193, 5, 5);
  CHECK(dc.n2 == 2);
  CHECK(dc.modulus2 == 39);

  CHECK_THROWS_AS(dual_witness(7, 1, 1), domain_error);
  CHECK_THROWS_AS(dual_witness(1, 1, 1), domain_error);
  CHECK_THROWS_AS(dual_witness(5, 0, 1), domain_error);
}

TEST_CASE("dual congruence is an involution describing the same triple") {
  for (i64 a = 2; a <= 300; ++a) {
    const auto w = congruence_search(a);
    if (!w) continue;
    const auto dc = dual_witness(a, w->d, w->n);
    CHECK(dc.modulus2 == 4 * w->d * dc.n2 - 1);
    const auto back = dual_witness(a, w->d, dc.n2);
    CHECK(back.n2 == w->n);
    CHECK(back.modulus2 == 4 * w->d * w->n - 1);
    Witness mirror;
    mirror.a = a;
    mirror.d = w->d;
    mirror.n = dc.n2;
    mirror.u = (a + dc.n2) / (4 * w->d * dc.n2 - 1);
    CHECK(to_triple(mirror) == to_triple(*w));
  }
}

TEST_CASE("shared-shape divisor pins") {
  CHECK(both_ab(5) == 1);
  CHECK(both_ab(13) == 2);
  CHECK(both_ab(2) == 1);
  CHECK_FALSE(both_ab(193).has_value());
  CHECK_FALSE(both_ab(73).has_value());
  CHECK_FALSE(both_ab(7).has_value());
  CHECK_THROWS_AS(both_ab(1), domain_error);

  CHECK(both_ab_triple(5, 1) == core::SolutionTriple{5, 2, 5, 10});
  CHECK(both_ab_triple(13, 2) == core::SolutionTriple{13, 4, 26, 52});
  CHECK(both_ab_triple(2, 1) == core::SolutionTriple{2, 1, 2, 2});
  CHECK_THROWS_AS(both_ab_triple(13, 3), domain_error);
  CHECK_THROWS_AS(both_ab_triple(0, 1), domain_error);
}

TEST_CASE("shared-shape triples match both patterns") {
  for (i64 p : arith::primes_in(2, 300)) {
    const auto d = both_ab(p);
    if (!d) continue;
    const auto t = both_ab_triple(p, *d);
    CHECK(core::verify(t));
    const auto m = core::match_structure(t);
    CHECK(m.type_a.has_value());
    CHECK(m.type_b.has_value());
  }
}

TEST_CASE("congruence classes avoid quadratic residues") {
  for (i64 d = 1; d <= 50; ++d) {
    for (i64 n = 1; n <= 50; ++n) {
      CHECK(arith::jacobi(-4 * d, 4 * d * n - 1) == -1);
    }
  }
}

TEST_CASE("d stays within the derived ceiling") {
  for (i64 a = 2; a <= 500; ++a) {
    const auto w = congruence_search(a);
    if (!w) continue;
    const i64 cap = (a % 2 == 0) ? (a + 2) / 4 : (a + 3) / 8;
    CHECK(w->d <= cap);
  }
}

}  // TEST_SUITE
