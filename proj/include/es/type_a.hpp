#pragma once

#include <optional>
#include <vector>

#include "es/core.hpp"

namespace es::type_a {

// Divisor-form witness for p = 4k+1: w | k+1+t with w = -1 (mod 3+4t).
// Derived quantities: d = (k+1+t)/w, n = (w+1)/(3+4t), v = n*p,
// u = (1+n*p)/(4dn-1). Triple is (du, dv, duv).
struct Witness {
  i64 p = 0, k = 0;
  i64 t = 0, w = 0;
  i64 d = 0, n = 0, u = 0, v = 0;
};

// First witness in (t ascending, w ascending) order. p = 4k+1, k >= 1.
// Existence is equivalent to a Type A solution only for prime p.
std::optional<Witness> find_first_witness(i64 p, const arith::SpfTable* sieve = nullptr);

core::SolutionTriple to_triple(const Witness& w);

struct Enumeration {
  std::vector<Witness> witnesses;                      // (t, w) ascending
  std::vector<core::SolutionTriple> distinct_triples;  // deduplicated, sorted
};

// Every witness over the full t range 0..floor((k-1)/3).
Enumeration enumerate_witnesses(i64 p, const arith::SpfTable* sieve = nullptr);

// Congruence-form witness: p = -4d (mod 4dn-1). Works for every prime,
// including p = 3 (mod 4) and p = 2.
struct CongruenceWitness {
  i64 p = 0;
  i64 d = 0, n = 0;
  i64 u = 0, v = 0;  // u = (1+n*p)/(4dn-1), v = n*p
};

// d ascending, then n; d <= max(1, floor((p+3)/8)). The bound is the
// proven ceiling for p = 1 (mod 4) primes; for p = 3 (mod 4) every
// solution with u >= 2 falls below it and a d = 1 hit always exists
// (p+4 = 3 (mod 4) has a divisor = 3 (mod 4)), so absence within the
// range certifies absence. exhaustive=false caps d at 64 as a screen.
std::optional<CongruenceWitness> congruence_search(i64 p, bool exhaustive = true,
                                                   const arith::SpfTable* sieve = nullptr);

core::SolutionTriple to_triple(const CongruenceWitness& w);

}  // namespace es::type_a
