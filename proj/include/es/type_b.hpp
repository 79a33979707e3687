#pragma once

#include <optional>

#include "es/core.hpp"

namespace es::type_b {

// Congruence-form witness: a = -n (mod 4dn-1), u = (a+n)/(4dn-1).
// Triple is (d*u*n, d*u*a, d*n*a). Valid for composite a as well.
struct Witness {
  i64 a = 0;
  i64 d = 0, n = 0, u = 0;
};

// First hit in (d, n) lexicographic order. Searches divisors of 4da+1
// congruent to -1 mod 4d (equivalent to 4dn-1 | a+n). The d range is
// derived from 4duv = a+u+v: even a caps at (a+2)/4, odd a at (a+3)/8.
std::optional<Witness> congruence_search(i64 a, const arith::SpfTable* sieve = nullptr);

// Divisor-form witness for a = 4k+1: a_div*b_div*d = k+1+t with
// a_div + b_div = 3+4t (the product-divides form).
struct FactorWitness {
  i64 k = 0;
  i64 t = 0, a_div = 0, b_div = 0, d = 0;  // a_div < b_div
};

// First hit in (t ascending, a_div ascending) order.
std::optional<FactorWitness> factor_search(i64 a, const arith::SpfTable* sieve = nullptr);

// The correspondence from the divisor form: n = a_div, same d.
Witness witness_from_factor(i64 a, const FactorWitness& fw);

core::SolutionTriple to_triple(const Witness& w);

// Companion congruence of the same solution: n' = (a+n)/(4dn-1),
// modulus' = (4ad+1)/(4dn-1). Applying it twice returns the original.
struct DualCongruence {
  i64 n2 = 0, modulus2 = 0;
};
DualCongruence dual_witness(i64 a, i64 d, i64 n);

// Smallest d with (4d-1) | (p+1); the triple (du, dp, dup) with
// u = (p+1)/(4d-1) then carries both the A and the B shape.
std::optional<i64> both_ab(i64 p, const arith::SpfTable* sieve = nullptr);
core::SolutionTriple both_ab_triple(i64 p, i64 d);

}  // namespace es::type_b
