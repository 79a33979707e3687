#include "es/type_a.hpp"

#include <algorithm>

namespace es::type_a {

using arith::checked_add;
using arith::checked_mul;

namespace {

Witness build_witness(i64 p, i64 k, i64 t, i64 w) {
  Witness out;
  out.p = p;
  out.k = k;
  out.t = t;
  out.w = w;
  const i64 m = 3 + 4 * t;
  out.d = (k + 1 + t) / w;
  out.n = (w + 1) / m;
  out.v = checked_mul(out.n, p);
  const i64 mod = 4 * out.d * out.n - 1;
  const i64 num = checked_add(out.v, 1);
  if (mod <= 0 || num % mod != 0) {
    throw internal_error("type A witness failed to produce integral u");
  }
  out.u = num / mod;
  return out;
}

}  // namespace

std::optional<Witness> find_first_witness(i64 p, const arith::SpfTable* sieve) {
  if (p < 5 || p % 4 != 1) throw domain_error("requires p = 4k+1 with k >= 1");
  const i64 k = (p - 1) / 4;
  for (i64 t = 0; t <= (k - 1) / 3; ++t) {
    const i64 m = 3 + 4 * t;
    for (i64 w : arith::divisors(k + 1 + t, sieve)) {
      if (w % m == m - 1) return build_witness(p, k, t, w);
    }
  }
  return std::nullopt;
}

Enumeration enumerate_witnesses(i64 p, const arith::SpfTable* sieve) {
  if (p < 5 || p % 4 != 1) throw domain_error("requires p = 4k+1 with k >= 1");
  const i64 k = (p - 1) / 4;
  Enumeration out;
  for (i64 t = 0; t <= (k - 1) / 3; ++t) {
    const i64 m = 3 + 4 * t;
    for (i64 w : arith::divisors(k + 1 + t, sieve)) {
      if (w % m == m - 1) out.witnesses.push_back(build_witness(p, k, t, w));
    }
  }
  for (const Witness& w : out.witnesses) {
    out.distinct_triples.push_back(to_triple(w));
  }
  std::sort(out.distinct_triples.begin(), out.distinct_triples.end());
  out.distinct_triples.erase(
      std::unique(out.distinct_triples.begin(), out.distinct_triples.end()),
      out.distinct_triples.end());
  return out;
}

core::SolutionTriple to_triple(const Witness& w) {
  auto t = core::make_triple(w.p, checked_mul(w.d, w.u), checked_mul(w.d, w.v),
                             checked_mul(checked_mul(w.d, w.u), w.v));
  if (!core::verify(t)) throw internal_error("type A witness triple failed verification");
  return t;
}

std::optional<CongruenceWitness> congruence_search(i64 p, bool exhaustive,
                                                   const arith::SpfTable* sieve) {
  if (p < 2) throw domain_error("requires p >= 2");
  i64 d_max = std::max<i64>(1, (p + 3) / 8);
  if (!exhaustive) d_max = std::min<i64>(d_max, 64);
  for (i64 d = 1; d <= d_max; ++d) {
    const i64 fourd = 4 * d;
    for (i64 D : arith::divisors(checked_add(p, fourd), sieve)) {
      if (D % fourd != fourd - 1) continue;
      CongruenceWitness out;
      out.p = p;
      out.d = d;
      out.n = (D + 1) / fourd;
      out.v = checked_mul(out.n, p);
      // 4dn = 1 (mod D) and p = -4d (mod D) give D | 1+np.
      if ((out.v + 1) % D != 0) {
        throw internal_error("type A congruence hit failed to produce integral u");
      }
      out.u = (out.v + 1) / D;
      return out;
    }
  }
  return std::nullopt;
}

core::SolutionTriple to_triple(const CongruenceWitness& w) {
  auto t = core::make_triple(w.p, checked_mul(w.d, w.u), checked_mul(w.d, w.v),
                             checked_mul(checked_mul(w.d, w.u), w.v));
  if (!core::verify(t)) throw internal_error("type A congruence triple failed verification");
  return t;
}

}  // namespace es::type_a
