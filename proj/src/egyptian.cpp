#include "es/egyptian.hpp"

namespace es::egyptian {

using arith::checked_add;
using arith::checked_mul;

std::optional<Order2> order2(i64 a, i64 b, const arith::SpfTable* sieve) {
  if (a < 1 || b < 1) throw domain_error("requires positive a, b");
  if (a > 2 * b) return std::nullopt;  // two unit fractions cannot reach it
  const auto ds = arith::divisors(b, sieve);
  for (i64 v : ds) {
    for (i64 u : ds) {
      if (u > v) break;
      if (b % checked_mul(u, v) != 0) continue;
      if ((u + v) % a != 0) continue;
      Order2 r;
      r.a = a;
      r.b = b;
      r.u = u;
      r.v = v;
      const i64 c = (u + v) / a;
      r.y = checked_mul(b / u, c);
      r.z = checked_mul(b / v, c);
      return r;
    }
  }
  return std::nullopt;
}

std::optional<core::SolutionTriple> lift(i64 k, i64 d, const arith::SpfTable* sieve) {
  if (k < 1 || d < 1) throw domain_error("requires k >= 1, d >= 1");
  const i64 n = checked_add(checked_mul(4, k), 1);
  const i64 x = checked_add(k, d);
  auto dec = order2(4 * d - 1, x, sieve);
  if (!dec) return std::nullopt;
  auto t = core::make_triple(n, x, checked_mul(n, dec->y), checked_mul(n, dec->z));
  if (!core::verify(t)) throw internal_error("lifted triple failed verification");
  return t;
}

bool lift_exists(i64 k, const arith::SpfTable* sieve) {
  if (k < 1) throw domain_error("requires k >= 1");
  for (i64 d = 1; d <= k + 1; ++d) {
    if (lift(k, d, sieve)) return true;
  }
  return false;
}

std::vector<ChainEntry> chain(i64 n, i64 factorial_cap) {
  if (n < 2) throw domain_error("requires n >= 2");
  if (n > factorial_cap) throw resource_error("n exceeds the factorial cap");
  i64 fact = 1;
  for (i64 i = 2; i <= n; ++i) fact = checked_mul(fact, i);

  std::vector<ChainEntry> out;
  const i64 half = n / 2;
  const i64 lo = checked_add(checked_mul(4, fact - half), 1);
  const i64 hi = checked_add(checked_mul(4, fact - 1), 4);
  for (i64 m = lo; m <= hi; ++m) {
    ChainEntry e;
    e.value = m;
    if (m % 4 == 1) {
      // Anchor: m = 4(n!-f)+1. The pair (2f, 2f-1) divides n!,
      // sums to 4f-1 = 4d-1, and x = k+d = n!.
      const i64 f = fact - (m - 1) / 4;
      const i64 u = 2 * f, v = 2 * f - 1;
      if (f < 1 || f > half || fact % u != 0 || fact % v != 0) {
        throw internal_error("chain anchor outside the constructed range");
      }
      e.triple = core::make_triple(m, fact, checked_mul(m, fact / u), checked_mul(m, fact / v));
    } else if (m % 2 == 0) {
      e.triple = even_identity(m);
    } else {
      e.triple = mod4_identity(m);
    }
    if (!core::verify(e.triple)) throw internal_error("chain entry failed verification");
    out.push_back(std::move(e));
  }
  return out;
}

core::SolutionTriple even_identity(i64 m) {
  if (m < 2 || m % 2 != 0) throw domain_error("requires even m >= 2");
  const i64 q = m / 2;
  return core::make_triple(m, q, m, m);  // 1/q + 1/2q + 1/2q = 2/q
}

core::SolutionTriple mod4_identity(i64 m) {
  if (m < 3 || m % 4 != 3) throw domain_error("requires m = 3 (mod 4)");
  // 4/(m+1) + 4/(m(m+1)) = 4/m, and both terms split off cleanly.
  const i64 big = checked_mul(m, (m + 1) / 2);
  return core::make_triple(m, (m + 1) / 4, big, big);
}

core::SolutionTriple mod3_identity(i64 m) {
  if (m < 2 || m % 3 != 2) throw domain_error("requires m = 2 (mod 3)");
  return core::make_triple(m, m, (m + 1) / 3, checked_mul(m, (m + 1) / 3));
}

}  // namespace es::egyptian
