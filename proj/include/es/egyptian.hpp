#pragma once

#include <optional>
#include <vector>

#include "es/core.hpp"

namespace es::egyptian {

// a/b = 1/y + 1/z built from a divisor pair: u <= v, u*v | b,
// a | u+v, c = (u+v)/a, y = b*c/u, z = b*c/v.
// The product condition u*v | b is what the Type II lift needs; the
// weaker "u | b and v | b" admits decompositions whose lift is never
// Type II (e.g. 15/10 through (5,10)).
struct Order2 {
  i64 a = 0, b = 0;
  i64 u = 0, v = 0;
  i64 y = 0, z = 0;
};

// Pairs are scanned ordered by (larger element, then smaller); first
// qualifying pair wins.
std::optional<Order2> order2(i64 a, i64 b, const arith::SpfTable* sieve = nullptr);

// Decompose (4d-1)/(k+d) and lift: x = k+d, triple (x, n*y, n*z)
// for n = 4k+1.
std::optional<core::SolutionTriple> lift(i64 k, i64 d,
                                         const arith::SpfTable* sieve = nullptr);

// Whether any d <= k+1 lifts; equivalent to 4k+1 being an R-value.
bool lift_exists(i64 k, const arith::SpfTable* sieve = nullptr);

struct ChainEntry {
  i64 value = 0;
  core::SolutionTriple triple;
};

// Verified solutions for every m in [4(n!-floor(n/2))+1, 4(n!-1)+4].
// Anchors m = 4(n!-f)+1 use the fixed divisor pair (2f, 2f-1) of n!;
// the rest come from the closed-form identities below.
std::vector<ChainEntry> chain(i64 n, i64 factorial_cap = 20);

core::SolutionTriple even_identity(i64 m);  // m even: (q, 2q, 2q), q = m/2
core::SolutionTriple mod4_identity(i64 m);  // m = 3 (mod 4)
core::SolutionTriple mod3_identity(i64 m);  // m = 2 (mod 3)

}  // namespace es::egyptian
