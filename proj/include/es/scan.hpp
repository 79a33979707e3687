#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "es/core.hpp"

namespace es::scan {

struct ScanRecord {
  i64 n = 0;
  bool prime = false;
  std::optional<i64> k;  // (n-1)/4 when n = 1 (mod 4)
  bool has_a = false;
  std::optional<i64> a_t, a_w, a_d;  // divisor form; only a_d for p = 3 (mod 4)
  bool has_b = false;
  std::optional<i64> b_d, b_n, b_u;
  bool has_c = false;
  std::optional<i64> c_d, c_m;
  std::optional<i64> both_ab_d;          // primes only
  std::optional<i64> distinct_a_count;   // only when requested
  bool operator==(const ScanRecord&) const = default;
};

enum class Filter { All4k1, PrimesOnly };

struct Options {
  i64 lo = 2;
  i64 hi = 2;
  Filter filter = Filter::All4k1;
  int workers = 1;
  bool with_counts = false;
  i64 sieve_limit = arith::kDefaultSieveLimit;
};

// Chunked deterministically (1024 values per chunk, merged in order):
// output is byte-identical for any worker count.
std::vector<ScanRecord> scan_range(const Options& opt);

// Build the record for a single qualifying n.
ScanRecord make_record(i64 n, bool with_counts, const arith::SpfTable* sieve);

struct Counterexample {
  i64 p = 0;
  // Exhausted search ceilings, as evidence.
  i64 a_d_max = 0, b_d_max = 0, t_max = 0;
};

// Primes p <= limit failing every congruence family of the conjecture
// (1: Type A or B; 2: additionally Type C for p = 1 (mod 4)).
std::vector<Counterexample> find_counterexamples(i64 limit, int conjecture, int workers = 1,
                                                 i64 sieve_limit = arith::kDefaultSieveLimit);

enum class Format { Csv, Json };

void write_csv(const std::vector<ScanRecord>& records, std::ostream& os);
void write_json(const std::vector<ScanRecord>& records, std::ostream& os);

// Returns bytes written. UTF-8, LF line endings.
std::size_t write_report(const std::vector<ScanRecord>& records, Format format,
                         const std::string& path);

std::vector<ScanRecord> parse_csv(std::istream& is);
std::vector<ScanRecord> parse_json(std::istream& is);

}  // namespace es::scan
