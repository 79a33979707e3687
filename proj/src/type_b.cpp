#include "es/type_b.hpp"

namespace es::type_b {

using arith::checked_add;
using arith::checked_mul;

std::optional<Witness> congruence_search(i64 a, const arith::SpfTable* sieve) {
  if (a < 2) throw domain_error("requires a >= 2");
  const i64 d_max = (a % 2 == 0) ? (a + 2) / 4 : (a + 3) / 8;
  for (i64 d = 1; d <= d_max; ++d) {
    const i64 fourd = 4 * d;
    const i64 m = checked_add(checked_mul(fourd, a), 1);
    for (i64 D : arith::divisors(m, sieve)) {
      if (D % fourd != fourd - 1) continue;
      Witness w;
      w.a = a;
      w.d = d;
      w.n = (D + 1) / fourd;
      // D = 4dn-1 divides 4da+1, hence a+n as well.
      if ((a + w.n) % D != 0) {
        throw internal_error("type B congruence hit failed to produce integral u");
      }
      w.u = (a + w.n) / D;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<FactorWitness> factor_search(i64 a, const arith::SpfTable* sieve) {
  if (a < 5 || a % 4 != 1) throw domain_error("requires a = 4k+1 with k >= 1");
  const i64 k = (a - 1) / 4;
  for (i64 t = 0; t <= (k - 1) / 3; ++t) {
    const i64 sum = 3 + 4 * t;
    const i64 target = k + 1 + t;
    for (i64 ad : arith::divisors(target, sieve)) {
      if (2 * ad >= sum) break;  // a_div < b_div
      const i64 bd = sum - ad;
      if (target % checked_mul(ad, bd) == 0) {
        return FactorWitness{k, t, ad, bd, target / (ad * bd)};
      }
    }
  }
  return std::nullopt;
}

Witness witness_from_factor(i64 a, const FactorWitness& fw) {
  Witness w;
  w.a = a;
  w.d = fw.d;
  w.n = fw.a_div;
  const i64 mod = 4 * w.d * w.n - 1;
  if ((a + w.n) % mod != 0) {
    throw internal_error("factor witness does not satisfy the congruence");
  }
  w.u = (a + w.n) / mod;
  return w;
}

core::SolutionTriple to_triple(const Witness& w) {
  auto t = core::make_triple(w.a, checked_mul(checked_mul(w.d, w.u), w.n),
                             checked_mul(checked_mul(w.d, w.u), w.a),
                             checked_mul(checked_mul(w.d, w.n), w.a));
  if (!core::verify(t)) throw internal_error("type B witness triple failed verification");
  return t;
}

DualCongruence dual_witness(i64 a, i64 d, i64 n) {
  if (a < 2 || d < 1 || n < 1) throw domain_error("requires a >= 2, d >= 1, n >= 1");
  const i64 mod = 4 * d * n - 1;
  if ((a + n) % mod != 0) throw domain_error("witness congruence does not hold");
  DualCongruence out;
  out.n2 = (a + n) / mod;
  const i64 m = checked_add(checked_mul(checked_mul(4, a), d), 1);
  if (m % mod != 0) throw internal_error("dual modulus not integral");
  out.modulus2 = m / mod;
  return out;
}

std::optional<i64> both_ab(i64 p, const arith::SpfTable* sieve) {
  if (p < 2) throw domain_error("requires p >= 2");
  for (i64 D : arith::divisors(checked_add(p, 1), sieve)) {
    if (D % 4 == 3) return (D + 1) / 4;
  }
  return std::nullopt;
}

core::SolutionTriple both_ab_triple(i64 p, i64 d) {
  if (p < 2 || d < 1) throw domain_error("requires p >= 2, d >= 1");
  const i64 mod = 4 * d - 1;
  if ((p + 1) % mod != 0) throw domain_error("(4d-1) does not divide p+1");
  const i64 u = (p + 1) / mod;
  auto t = core::make_triple(p, checked_mul(d, u), checked_mul(d, p),
                             checked_mul(checked_mul(d, u), p));
  if (!core::verify(t)) throw internal_error("shared-shape triple failed verification");
  return t;
}

}  // namespace es::type_b
