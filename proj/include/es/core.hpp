#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "es/arith.hpp"

namespace es::core {

struct SolutionTriple {
  i64 n = 0;
  i64 x = 0, y = 0, z = 0;  // x <= y <= z
  auto operator<=>(const SolutionTriple&) const = default;
};

// Sorts the coordinates; does not check the equation.
SolutionTriple make_triple(i64 n, i64 a, i64 b, i64 c);

// Exact test of 4xyz == n(xy + xz + yz); widened internally.
bool verify(i64 n, i64 x, i64 y, i64 z);
bool verify(const SolutionTriple& t);

// Every solution with x <= y <= z, ordered lexicographically.
std::vector<SolutionTriple> enumerate_all(i64 n);

enum class GcdClass { TypeI, TypeII, Other };

// Classified over all coordinate orderings.
GcdClass gcd_class(const SolutionTriple& t);

struct StructureMatch {
  // (d, u, v) with sorted coords equal to sort(du, dv, duv)
  std::optional<std::array<i64, 3>> type_a;
  // (d, u, v) with sorted coords equal to sort(duv, dun, dvn)
  std::optional<std::array<i64, 3>> type_b;
  // (u, v, w) with sorted coords equal to sort(uv, uwn, vwn)
  std::optional<std::array<i64, 3>> type_c;
};

// Purely multiplicative pattern detection; tries every coordinate
// assignment and keeps the lexicographically smallest parameters.
StructureMatch match_structure(const SolutionTriple& t);

// (a*b*d, a*c*d*n, b*c*d*n), unsorted and unverified by design.
std::array<i64, 3> project_sextuple(i64 a, i64 b, i64 c, i64 d, i64 n);

}  // namespace es::core
