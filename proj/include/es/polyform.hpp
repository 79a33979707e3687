#pragma once

#include <optional>
#include <vector>

#include "es/core.hpp"

namespace es::polyform {

// P(x,y,t) = (4xy-1)(3+4t) - 4x^2y    membership <=> Type B witness
// Q(x,y,t) = (4xy-1)(3+4t) - 4y       membership <=> Type A witness
// R(x,y,t,z) = (4xyz-1)(3+4t) - 4x^2y
// S(x,y,t) = R(x,1,t,y) = (4xy-1)(3+4t) - 4x^2   membership <=> Type C
enum class Poly { P, Q, R, S };

constexpr int arity(Poly id) { return id == Poly::R ? 4 : 3; }

i64 eval_p(i64 x, i64 y, i64 t);
i64 eval_q(i64 x, i64 y, i64 t);
i64 eval_r(i64 x, i64 y, i64 t, i64 z);
i64 eval_s(i64 x, i64 y, i64 t);
i64 eval(Poly id, const std::vector<i64>& args);

// Lexicographically first preimage in argument order, over the finite
// region implied by the shared bound t <= floor((k-1)/3), k = (n-1)/4.
std::optional<std::vector<i64>> preimage_search(i64 target, Poly id,
                                                const arith::SpfTable* sieve = nullptr);

// n = S(1, s+1, t) and n' = P(1, s+1, t) differ by exactly 4s; the
// pair comes back with constructively verified triples (Type C for n,
// Type B for n').
struct GapPair {
  i64 n = 0, n_prime = 0;
  core::SolutionTriple triple_n;
  core::SolutionTriple triple_n_prime;
};
GapPair gap_pair(i64 s, i64 t);

}  // namespace es::polyform
