#include "es/core.hpp"

#include <algorithm>
#include <numeric>

namespace es::core {

using arith::checked_mul;
using arith::checked_mul128;
using arith::narrow;

SolutionTriple make_triple(i64 n, i64 a, i64 b, i64 c) {
  if (n < 1 || a < 1 || b < 1 || c < 1) {
    throw domain_error("triple values must be positive");
  }
  std::array<i64, 3> v{a, b, c};
  std::sort(v.begin(), v.end());
  return SolutionTriple{n, v[0], v[1], v[2]};
}

bool verify(i64 n, i64 x, i64 y, i64 z) {
  if (n < 1 || x < 1 || y < 1 || z < 1) {
    throw domain_error("verify requires positive values");
  }
  i128 xy = static_cast<i128>(x) * y;
  i128 xz = static_cast<i128>(x) * z;
  i128 yz = static_cast<i128>(y) * z;
  i128 lhs = checked_mul128(checked_mul128(4, xy), z);
  i128 rhs = checked_mul128(n, xy + xz + yz);
  return lhs == rhs;
}

bool verify(const SolutionTriple& t) { return verify(t.n, t.x, t.y, t.z); }

std::vector<SolutionTriple> enumerate_all(i64 n) {
  if (n < 2) throw domain_error("enumerate_all requires n >= 2");
  std::vector<SolutionTriple> out;
  // 4/n = 1/x + 1/y + 1/z with x <= y <= z forces n/4 < x <= 3n/4.
  const i128 x_hi = 3 * static_cast<i128>(n) / 4;
  for (i64 x = n / 4 + 1; x <= x_hi; ++x) {
    i128 p = 4 * static_cast<i128>(x) - n;  // remainder 4/n - 1/x = p/q
    i128 q = static_cast<i128>(n) * x;
    i128 y_lo = (q + p - 1) / p;
    if (y_lo < x) y_lo = x;
    i128 y_hi = 2 * q / p;
    for (i128 y = y_lo; y <= y_hi; ++y) {
      i128 den = p * y - q;
      if (den <= 0) continue;
      i128 num = q * y;
      if (num % den != 0) continue;
      i128 z = num / den;
      if (z < y) continue;
      out.push_back(SolutionTriple{n, x, narrow(y), narrow(z)});
    }
  }
  return out;  // x ascending, then y: already lexicographic
}

GcdClass gcd_class(const SolutionTriple& t) {
  if (t.n < 1) throw domain_error("gcd_class requires positive n");
  std::array<i64, 3> g{std::gcd(t.n, t.x), std::gcd(t.n, t.y), std::gcd(t.n, t.z)};
  int coprime = 0, full = 0;
  for (i64 v : g) {
    if (v == 1) ++coprime;
    if (v == t.n) ++full;
  }
  if (coprime >= 2 && full >= 1) return GcdClass::TypeI;
  if (coprime >= 1 && full >= 2) return GcdClass::TypeII;
  return GcdClass::Other;
}

namespace {

void keep_min(std::optional<std::array<i64, 3>>& slot, std::array<i64, 3> cand) {
  if (!slot || cand < *slot) slot = cand;
}

u128 isqrt128(u128 n) {
  if (n < 2) return n;
  u128 x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

}  // namespace

StructureMatch match_structure(const SolutionTriple& t) {
  StructureMatch m;
  const std::array<i64, 3> c{t.x, t.y, t.z};
  const i64 n = t.n;

  for (int iz = 0; iz < 3; ++iz) {
    for (int ix = 0; ix < 3; ++ix) {
      if (ix == iz) continue;
      int iy = 3 - ix - iz;
      const i64 X = c[ix], Y = c[iy], Z = c[iz];

      // (du, dv, duv): d = XY/Z must divide both X and Y.
      i128 xy = static_cast<i128>(X) * Y;
      if (xy % Z == 0) {
        i128 dq = xy / Z;
        if (dq <= X && dq <= Y) {
          i64 d = static_cast<i64>(dq);
          if (X % d == 0 && Y % d == 0) keep_min(m.type_a, {d, X / d, Y / d});
        }
      }

      if (Y % n == 0 && Z % n == 0) {
        // (duv, dun, dvn): X = d*u*v, the other two carry the factor n.
        i64 yn = Y / n, zn = Z / n;
        i128 prod = static_cast<i128>(yn) * zn;
        if (prod % X == 0) {
          i128 dq = prod / X;
          if (dq <= yn && dq <= zn) {
            i64 d = static_cast<i64>(dq);
            if (yn % d == 0 && zn % d == 0) keep_min(m.type_b, {d, yn / d, zn / d});
          }
        }

        // (uv, uwn, vwn): YZ = X * (wn)^2.
        i128 denom = checked_mul128(X, static_cast<i128>(n) * n);
        i128 yz = static_cast<i128>(Y) * Z;
        if (yz % denom == 0) {
          u128 w2 = static_cast<u128>(yz / denom);
          u128 w = isqrt128(w2);
          if (w >= 1 && w * w == w2 && w <= static_cast<u128>(std::min(yn, zn))) {
            i64 wn = checked_mul(static_cast<i64>(w), n);
            if (Y % wn == 0 && Z % wn == 0) {
              keep_min(m.type_c, {Y / wn, Z / wn, static_cast<i64>(w)});
            }
          }
        }
      }
    }
  }
  return m;
}

std::array<i64, 3> project_sextuple(i64 a, i64 b, i64 c, i64 d, i64 n) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || n < 1) {
    throw domain_error("sextuple components must be positive");
  }
  i64 abd = checked_mul(checked_mul(a, b), d);
  i64 acdn = checked_mul(checked_mul(checked_mul(a, c), d), n);
  i64 bcdn = checked_mul(checked_mul(checked_mul(b, c), d), n);
  return {abd, acdn, bcdn};
}

}  // namespace es::core
