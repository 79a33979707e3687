#include "es/arith.hpp"

#include <algorithm>
#include <limits>
#include <new>
#include <string>

namespace es::arith {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw arithmetic_error("64-bit overflow in addition");
  }
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw arithmetic_error("64-bit overflow in multiplication");
  }
  return r;
}

i128 checked_mul128(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw arithmetic_error("128-bit overflow in multiplication");
  }
  return r;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
    throw arithmetic_error("value outside the 64-bit range");
  }
  return static_cast<i64>(v);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = m > 1 ? 1 : 0;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

// Strong-pseudoprime check; this base set is deterministic past 2^64.
constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool miller_rabin(u64 n) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnesses) {
    if (a % n == 0) continue;
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  return miller_rabin(static_cast<u64>(n));
}

i64 SpfTable::spf(i64 n) const {
  if (n < 2 || n > limit()) {
    throw domain_error("spf query outside table range");
  }
  return table_[static_cast<std::size_t>(n)];
}

SpfTable spf_sieve(i64 limit) {
  if (limit < 2) throw domain_error("sieve limit must be at least 2");
  if (limit > (i64{1} << 32)) throw resource_error("sieve limit too large");
  SpfTable t;
  try {
    t.table_.assign(static_cast<std::size_t>(limit) + 1, 0);
  } catch (const std::bad_alloc&) {
    throw resource_error("sieve allocation failed");
  }
  for (i64 i = 2; i <= limit; ++i) {
    if (t.table_[static_cast<std::size_t>(i)] != 0) continue;
    for (i64 j = i; j <= limit; j += i) {
      auto& cell = t.table_[static_cast<std::size_t>(j)];
      if (cell == 0) cell = static_cast<std::uint32_t>(i);
    }
  }
  return t;
}

i64 Factorization::divisor_count() const {
  i64 c = 1;
  for (const auto& [p, e] : factors) c = checked_mul(c, e + 1);
  return c;
}

Factorization factorize(i64 n, const SpfTable* sieve) {
  if (n < 2) throw domain_error("factorize requires n >= 2");
  Factorization f;
  f.value = n;
  if (sieve != nullptr && n <= sieve->limit()) {
    while (n > 1) {
      i64 p = sieve->spf(n);
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.factors.emplace_back(p, e);
    }
    return f;
  }
  auto take = [&](i64 p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors.emplace_back(p, e);
  };
  take(2);
  take(3);
  // 6k+-1 wheel; once the cofactor tests prime the loop can stop.
  for (i64 p = 5; p <= n / p; p += (p % 6 == 5) ? 2 : 4) {
    if (n % p != 0) continue;
    take(p);
    if (n > 1 && is_prime(n)) break;
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

std::vector<i64> divisors(const Factorization& f) {
  std::vector<i64> ds{1};
  for (const auto& [p, e] : f.factors) {
    std::size_t before = ds.size();
    i64 pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe = checked_mul(pe, p);
      for (std::size_t j = 0; j < before; ++j) {
        ds.push_back(checked_mul(ds[j], pe));
      }
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<i64> divisors(i64 n, const SpfTable* sieve) {
  if (n == 1) return {1};
  return divisors(factorize(n, sieve));
}

int jacobi(i64 a, i64 m) {
  if (m <= 0 || m % 2 == 0) throw domain_error("jacobi requires odd positive m");
  a %= m;
  if (a < 0) a += m;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

std::optional<i64> is_perfect_square(i64 n) {
  if (n < 0) return std::nullopt;
  // Integer Newton iteration; exact, no floating point.
  if (n < 2) return n;
  i64 x = n;
  i64 y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x * x == n ? std::optional<i64>(x) : std::nullopt;
}

std::vector<i64> primes_in(i64 lo, i64 hi) {
  if (lo > hi) throw domain_error("primes_in requires lo <= hi");
  std::vector<i64> ps;
  if (hi < 2) return ps;
  lo = std::max<i64>(lo, 2);
  if (lo == 2) {
    ps.push_back(2);
    lo = 3;
  }
  if (lo % 2 == 0) ++lo;
  for (i64 n = lo; n <= hi; n += 2) {
    if (is_prime(n)) ps.push_back(n);
  }
  return ps;
}

}  // namespace es::arith
