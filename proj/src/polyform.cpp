#include "es/polyform.hpp"

#include "es/type_b.hpp"
#include "es/type_c.hpp"

namespace es::polyform {

using arith::checked_add;
using arith::checked_mul;

namespace {

void check_args(i64 x, i64 y, i64 t, i64 z = 1) {
  if (x < 1 || y < 1 || z < 1 || t < 0) {
    throw domain_error("polynomial arguments must be positive (t nonnegative)");
  }
}

i64 base(i64 prod, i64 t) {
  // (4*prod - 1)(3 + 4t), checked.
  return checked_mul(checked_add(checked_mul(4, prod), -1), checked_add(3, checked_mul(4, t)));
}

}  // namespace

i64 eval_p(i64 x, i64 y, i64 t) {
  check_args(x, y, t);
  return checked_add(base(checked_mul(x, y), t), -checked_mul(checked_mul(4, checked_mul(x, x)), y));
}

i64 eval_q(i64 x, i64 y, i64 t) {
  check_args(x, y, t);
  return checked_add(base(checked_mul(x, y), t), -checked_mul(4, y));
}

i64 eval_r(i64 x, i64 y, i64 t, i64 z) {
  check_args(x, y, t, z);
  return checked_add(base(checked_mul(checked_mul(x, y), z), t),
                     -checked_mul(checked_mul(4, checked_mul(x, x)), y));
}

i64 eval_s(i64 x, i64 y, i64 t) {
  check_args(x, y, t);
  return eval_r(x, 1, t, y);
}

i64 eval(Poly id, const std::vector<i64>& args) {
  if (static_cast<int>(args.size()) != arity(id)) {
    throw domain_error("wrong argument count for polynomial");
  }
  switch (id) {
    case Poly::P: return eval_p(args[0], args[1], args[2]);
    case Poly::Q: return eval_q(args[0], args[1], args[2]);
    case Poly::R: return eval_r(args[0], args[1], args[2], args[3]);
    case Poly::S: return eval_s(args[0], args[1], args[2]);
  }
  throw domain_error("unknown polynomial");
}

namespace {

// Each search fixes the non-t arguments and solves for 3+4t exactly.
// The caps come from the factor identities behind each membership:
//   P: k+1+t = x*y*(3+4t-x)        Q: k+1+t = y*(x(3+4t)-1)
//   S: k+1+t = x*(y(3+4t)-x)       R: k+1+t = x*y*(z(3+4t)-x)
// plus the shared ceiling t <= floor((k-1)/3).

std::optional<std::vector<i64>> search_p(i64 n, i64 k, i64 t_max) {
  const i64 budget = k + 1 + t_max;
  for (i64 x = 1; x <= 2 + 4 * t_max && x <= budget; ++x) {
    for (i64 y = 1; y <= budget / x; ++y) {
      const i64 den = 4 * x * y - 1;
      const i64 num = checked_add(n, checked_mul(checked_mul(4, x * x), y));
      if (num % den != 0) continue;
      const i64 c = num / den;
      if (c >= 3 && c % 4 == 3 && (c - 3) / 4 <= t_max) return std::vector<i64>{x, y, (c - 3) / 4};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<i64>> search_q(i64 n, i64 k, i64 t_max) {
  const i64 budget = k + 1 + t_max;
  for (i64 x = 1; 3 * x - 1 <= budget; ++x) {
    for (i64 y = 1; y <= budget / (3 * x - 1); ++y) {
      const i64 den = 4 * x * y - 1;
      const i64 num = checked_add(n, checked_mul(4, y));
      if (num % den != 0) continue;
      const i64 c = num / den;
      if (c >= 3 && c % 4 == 3 && (c - 3) / 4 <= t_max) return std::vector<i64>{x, y, (c - 3) / 4};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<i64>> search_s(i64 n, i64 k, i64 t_max) {
  const i64 budget = k + 1 + t_max;
  for (i64 x = 1; x <= budget; ++x) {
    // y(3+4t) = (k+1+t)/x + x, so 3y cannot exceed budget/x + x.
    for (i64 y = 1; 3 * y <= budget / x + x; ++y) {
      const i64 den = 4 * x * y - 1;
      const i64 num = checked_add(n, checked_mul(4, checked_mul(x, x)));
      if (num % den != 0) continue;
      const i64 c = num / den;
      if (c >= 3 && c % 4 == 3 && (c - 3) / 4 <= t_max) return std::vector<i64>{x, y, (c - 3) / 4};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<i64>> search_r(i64 n, i64 k, i64 t_max, const arith::SpfTable* sieve) {
  const i64 budget = k + 1 + t_max;
  for (i64 x = 1; x <= budget; ++x) {
    for (i64 y = 1; y <= budget / x; ++y) {
      const i64 fourxy = 4 * x * y;
      const i64 num = checked_add(n, checked_mul(checked_mul(4, x * x), y));
      // Divisors ascending means t ascending, and z is determined.
      for (i64 c : arith::divisors(num, sieve)) {
        if (c % 4 != 3) continue;
        if ((c - 3) / 4 > t_max) break;
        const i64 m = num / c;  // m = 4xyz - 1
        if (m % fourxy != fourxy - 1) continue;
        return std::vector<i64>{x, y, (c - 3) / 4, (m + 1) / fourxy};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<i64>> preimage_search(i64 target, Poly id,
                                                const arith::SpfTable* sieve) {
  if (target % 4 != 1 || target < 5) throw domain_error("target must be 4k+1 with k >= 1");
  const i64 k = (target - 1) / 4;
  const i64 t_max = (k - 1) / 3;
  if (k + 1 + t_max > (i64{1} << 22)) throw resource_error("preimage search region too large");
  std::optional<std::vector<i64>> hit;
  switch (id) {
    case Poly::P: hit = search_p(target, k, t_max); break;
    case Poly::Q: hit = search_q(target, k, t_max); break;
    case Poly::R: hit = search_r(target, k, t_max, sieve); break;
    case Poly::S: hit = search_s(target, k, t_max); break;
  }
  if (hit && eval(id, *hit) != target) throw internal_error("preimage does not evaluate back");
  return hit;
}

GapPair gap_pair(i64 s, i64 t) {
  if (s < 1 || t < 0) throw domain_error("requires s >= 1, t >= 0");
  GapPair out;
  out.n = eval_s(1, s + 1, t);
  out.n_prime = eval_p(1, s + 1, t);

  // S(1, s+1, t) corresponds to the Type C witness (d=1, m=s+1).
  type_c::Witness cw;
  cw.n_val = out.n;
  cw.k = (out.n - 1) / 4;
  cw.t = t;
  cw.d = 1;
  cw.m = s + 1;
  const i64 cmod = 4 * cw.m - 1;
  cw.v = (cw.d + checked_mul(out.n, cw.m)) / cmod;
  out.triple_n = type_c::to_triple(cw);

  // P(1, s+1, t) corresponds to the Type B witness (d=s+1, n=1).
  type_b::Witness bw;
  bw.a = out.n_prime;
  bw.d = s + 1;
  bw.n = 1;
  bw.u = (out.n_prime + 1) / cmod;
  out.triple_n_prime = type_b::to_triple(bw);
  return out;
}

}  // namespace es::polyform
