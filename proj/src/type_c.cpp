#include "es/type_c.hpp"

#include <numeric>

namespace es::type_c {

using arith::checked_add;
using arith::checked_mul;

std::optional<Witness> find_witness(i64 n_val, const arith::SpfTable* sieve) {
  if (n_val < 5 || n_val % 4 != 1) throw domain_error("requires n = 4k+1 with k >= 1");
  const i64 k = (n_val - 1) / 4;
  for (i64 t = 0; t <= (k - 1) / 3; ++t) {
    const i64 m_sum = 3 + 4 * t;
    const i64 target = k + 1 + t;
    for (i64 a : arith::divisors(target, sieve)) {
      const i64 b = target / a;
      if ((a + b) % m_sum != 0) continue;
      Witness w;
      w.n_val = n_val;
      w.k = k;
      w.t = t;
      w.d = a;
      w.m = (a + b) / m_sum;
      const i64 mod = 4 * w.d * w.m - 1;
      const i64 num = checked_add(w.d, checked_mul(n_val, w.m));
      if (num % mod != 0) {
        throw internal_error("type C witness failed to produce integral v");
      }
      w.v = num / mod;
      return w;
    }
  }
  return std::nullopt;
}

core::SolutionTriple to_triple(const Witness& w) {
  auto t = core::make_triple(w.n_val, checked_mul(w.d, w.v),
                             checked_mul(checked_mul(w.d, w.m), w.n_val),
                             checked_mul(checked_mul(w.m, w.v), w.n_val));
  if (!core::verify(t)) throw internal_error("type C witness triple failed verification");
  return t;
}

std::vector<i64> qr_filter(i64 n_val, i64 u_cap) {
  if (n_val < 1 || u_cap < 1) throw domain_error("requires positive n and cap");
  std::vector<i64> admissible;
  for (i64 u = 1; u <= u_cap; ++u) {
    const i64 m = 4 * u - 1;
    if (std::gcd(n_val, m) != 1) continue;
    bool ok = false;
    for (i64 x = 1; 2 * x < m && !ok; ++x) {
      // Solutions pair up as {x, m-x}; exactly one member is even.
      if ((arith::mulmod(static_cast<u64>(x), static_cast<u64>(x), static_cast<u64>(m)) +
           static_cast<u64>(n_val % m)) %
              static_cast<u64>(m) !=
          0) {
        continue;
      }
      const i64 even = (x % 2 == 0) ? x : m - x;
      ok = u % (even / 2) == 0;
    }
    if (ok) admissible.push_back(u);
  }
  return admissible;
}

}  // namespace es::type_c
