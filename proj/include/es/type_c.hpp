#pragma once

#include <optional>
#include <vector>

#include "es/core.hpp"

namespace es::type_c {

// Witness for n_val = 4k+1: a factor pair a*b = k+1+t with
// (3+4t) | a+b, mapped to d = a, m = (a+b)/(3+4t). Then
// -n_val = 4d^2 (mod 4dm-1) and v = (d + n_val*m)/(4dm-1).
// Triple is (d*v, d*m*n_val, m*v*n_val).
struct Witness {
  i64 n_val = 0, k = 0;
  i64 t = 0;
  i64 d = 0, m = 0, v = 0;
};

// First hit in (t ascending, d ascending) order over the full factor
// pair list of k+1+t (both orders of each pair are candidates).
std::optional<Witness> find_witness(i64 n_val, const arith::SpfTable* sieve = nullptr);

core::SolutionTriple to_triple(const Witness& w);

// Quadratic-residue screen: u <= u_cap is admissible when
// gcd(n_val, 4u-1) = 1, x^2 = -n_val (mod 4u-1) has a solution, and
// for some solution the even member of {x, 4u-1-x}, halved, divides u.
// Every witness has u = d*m admissible.
std::vector<i64> qr_filter(i64 n_val, i64 u_cap);

}  // namespace es::type_c
