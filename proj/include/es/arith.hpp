#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace es {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Bad argument (wrong residue class, empty range, nonpositive input).
class domain_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A result or intermediate left the 64-bit range. Never silent wraparound.
class arithmetic_error : public std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Allocation or configured-limit failure.
class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proven invariant failed at runtime; indicates a bug, not bad input.
class internal_error : public std::logic_error {
  using std::logic_error::logic_error;
};

namespace arith {

inline constexpr i64 kDefaultSieveLimit = i64{1} << 22;

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i128 checked_mul128(i128 a, i128 b);
// Narrowing back to the public value range.
i64 narrow(i128 v);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Deterministic for the whole 64-bit range; no randomness, no floating point.
bool is_prime(i64 n);

// Smallest-prime-factor table for 2..limit, immutable once built.
class SpfTable {
 public:
  i64 limit() const { return static_cast<i64>(table_.size()) - 1; }
  i64 spf(i64 n) const;

 private:
  friend SpfTable spf_sieve(i64 limit);
  std::vector<std::uint32_t> table_;
};

SpfTable spf_sieve(i64 limit);

struct Factorization {
  i64 value = 1;
  std::vector<std::pair<i64, int>> factors;  // (prime, exponent), primes ascending
  i64 divisor_count() const;
};

// Uses the table when n is within its limit, trial division with a
// primality early-out otherwise.
Factorization factorize(i64 n, const SpfTable* sieve = nullptr);

// All positive divisors, ascending. divisors(1) = {1}.
std::vector<i64> divisors(i64 n, const SpfTable* sieve = nullptr);
std::vector<i64> divisors(const Factorization& f);

// Jacobi symbol (a|m) for odd positive m; a may be negative.
int jacobi(i64 a, i64 m);

std::optional<i64> is_perfect_square(i64 n);

// Primes in [lo, hi], ascending.
std::vector<i64> primes_in(i64 lo, i64 hi);

}  // namespace arith
}  // namespace es
