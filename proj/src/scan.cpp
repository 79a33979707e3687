#include "es/scan.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "es/type_a.hpp"
#include "es/type_b.hpp"
#include "es/type_c.hpp"

namespace es::scan {

namespace {

constexpr i64 kChunk = 1024;  // denominators per work unit

bool qualifies(i64 n, Filter f) {
  switch (f) {
    case Filter::All4k1:
      return n % 4 == 1;
    case Filter::PrimesOnly:
      return arith::is_prime(n);
  }
  return false;
}

// Largest value the divisor-form searches factorize for denominators
// up to hi: k+1+t with t <= (k-1)/3.
i64 divisor_target_bound(i64 hi) {
  const i64 k = (hi - 1) / 4;
  if (k < 1) return 2;
  return k + 1 + (k - 1) / 3;
}

template <typename Fn>
void run_chunked(i64 nchunks, int workers, Fn&& body) {
  std::atomic<i64> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      const i64 c = next.fetch_add(1);
      if (c >= nchunks) return;
      try {
        body(c);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ScanRecord make_record(i64 n, bool with_counts, const arith::SpfTable* sieve) {
  if (n < 2) throw domain_error("make_record: n must be >= 2");
  ScanRecord r;
  r.n = n;
  r.prime = arith::is_prime(n);
  if (n % 4 == 1) {
    r.k = (n - 1) / 4;
    if (auto aw = type_a::find_first_witness(n, sieve)) {
      r.has_a = true;
      r.a_t = aw->t;
      r.a_w = aw->w;
      r.a_d = aw->d;
    }
    if (auto fw = type_b::factor_search(n, sieve)) {
      r.has_b = true;
      const auto w = type_b::witness_from_factor(n, *fw);
      r.b_d = w.d;
      r.b_n = w.n;
      r.b_u = w.u;
    }
    if (auto cw = type_c::find_witness(n, sieve)) {
      r.has_c = true;
      r.c_d = cw->d;
      r.c_m = cw->m;
    }
    if (with_counts) {
      const auto en = type_a::enumerate_witnesses(n, sieve);
      r.distinct_a_count = static_cast<i64>(en.distinct_triples.size());
    }
  } else {
    // n = 2 or a prime = 3 (mod 4): congruence searches.
    if (auto aw = type_a::congruence_search(n, true, sieve)) {
      r.has_a = true;
      r.a_d = aw->d;
    }
    if (auto bw = type_b::congruence_search(n, sieve)) {
      r.has_b = true;
      r.b_d = bw->d;
      r.b_n = bw->n;
      r.b_u = bw->u;
    }
  }
  if (r.prime) {
    if (auto d = type_b::both_ab(n, sieve)) r.both_ab_d = *d;
  }
  return r;
}

std::vector<ScanRecord> scan_range(const Options& opt) {
  if (opt.lo < 2 || opt.lo > opt.hi) throw domain_error("scan_range: need 2 <= lo <= hi");
  if (opt.workers < 1) throw domain_error("scan_range: workers must be positive");
  if (opt.sieve_limit < 2) throw domain_error("scan_range: sieve limit must be >= 2");
  const i64 needed = divisor_target_bound(opt.hi);
  if (needed > opt.sieve_limit)
    throw resource_error("scan_range: sieve limit " + std::to_string(opt.sieve_limit) +
                         " below required " + std::to_string(needed));
  const arith::SpfTable sieve = arith::spf_sieve(std::max<i64>(needed, 64));

  const i64 nchunks = (opt.hi - opt.lo) / kChunk + 1;
  std::vector<std::vector<ScanRecord>> parts(static_cast<std::size_t>(nchunks));
  run_chunked(nchunks, opt.workers, [&](i64 c) {
    const i64 a = opt.lo + c * kChunk;
    const i64 b = std::min(opt.hi, a + kChunk - 1);
    std::vector<ScanRecord> part;
    for (i64 n = a; n <= b; ++n) {
      if (!qualifies(n, opt.filter)) continue;
      part.push_back(make_record(n, opt.with_counts, &sieve));
    }
    parts[static_cast<std::size_t>(c)] = std::move(part);
  });

  std::vector<ScanRecord> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<Counterexample> find_counterexamples(i64 limit, int conjecture, int workers,
                                                 i64 sieve_limit) {
  if (limit < 2) throw domain_error("find_counterexamples: limit must be >= 2");
  if (conjecture != 1 && conjecture != 2)
    throw domain_error("find_counterexamples: conjecture must be 1 or 2");
  if (workers < 1) throw domain_error("find_counterexamples: workers must be positive");
  const i64 build = std::min(sieve_limit, std::max<i64>(divisor_target_bound(limit), 64));
  const arith::SpfTable sieve = arith::spf_sieve(build);

  const i64 nchunks = (limit - 2) / kChunk + 1;
  std::vector<std::vector<Counterexample>> parts(static_cast<std::size_t>(nchunks));
  run_chunked(nchunks, workers, [&](i64 c) {
    const i64 a = 2 + c * kChunk;
    const i64 b = std::min(limit, a + kChunk - 1);
    std::vector<Counterexample> part;
    for (i64 p = a; p <= b; ++p) {
      if (!arith::is_prime(p)) continue;
      if (type_a::congruence_search(p, true, &sieve)) continue;
      if (type_b::congruence_search(p, &sieve)) continue;
      if (conjecture == 2 && p % 4 == 1 && type_c::find_witness(p, &sieve)) continue;
      Counterexample ce;
      ce.p = p;
      ce.a_d_max = std::max<i64>(1, (p + 3) / 8);
      ce.b_d_max = p % 2 == 0 ? (p + 2) / 4 : (p + 3) / 8;
      ce.t_max = p % 4 == 1 ? ((p - 1) / 4 - 1) / 3 : 0;
      part.push_back(ce);
    }
    parts[static_cast<std::size_t>(c)] = std::move(part);
  });

  std::vector<Counterexample> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

void put_cell(std::ostream& os, const std::optional<i64>& v) {
  if (v) os << *v;
}

const char* bool_word(bool b) { return b ? "true" : "false"; }

using ojson = nlohmann::ordered_json;

ojson field(const std::optional<i64>& v) {
  if (v) return ojson(*v);
  return ojson(nullptr);
}

std::optional<i64> opt_from(const ojson& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<i64>();
}

constexpr const char* kCsvHeader =
    "n,prime,k,has_a,a_t,a_w,a_d,has_b,b_d,b_n,b_u,has_c,c_d,c_m,both_ab_d,distinct_a_count";

std::optional<i64> cell_to_opt(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoll(s);
}

bool cell_to_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw domain_error("parse_csv: bad boolean cell '" + s + "'");
}

}  // namespace

void write_csv(const std::vector<ScanRecord>& records, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << bool_word(r.prime) << ',';
    put_cell(os, r.k);
    os << ',' << bool_word(r.has_a) << ',';
    put_cell(os, r.a_t);
    os << ',';
    put_cell(os, r.a_w);
    os << ',';
    put_cell(os, r.a_d);
    os << ',' << bool_word(r.has_b) << ',';
    put_cell(os, r.b_d);
    os << ',';
    put_cell(os, r.b_n);
    os << ',';
    put_cell(os, r.b_u);
    os << ',' << bool_word(r.has_c) << ',';
    put_cell(os, r.c_d);
    os << ',';
    put_cell(os, r.c_m);
    os << ',';
    put_cell(os, r.both_ab_d);
    os << ',';
    put_cell(os, r.distinct_a_count);
    os << '\n';
  }
}

void write_json(const std::vector<ScanRecord>& records, std::ostream& os) {
  ojson arr = ojson::array();
  for (const auto& r : records) {
    ojson o;
    o["n"] = r.n;
    o["prime"] = r.prime;
    o["k"] = field(r.k);
    o["has_a"] = r.has_a;
    o["a_t"] = field(r.a_t);
    o["a_w"] = field(r.a_w);
    o["a_d"] = field(r.a_d);
    o["has_b"] = r.has_b;
    o["b_d"] = field(r.b_d);
    o["b_n"] = field(r.b_n);
    o["b_u"] = field(r.b_u);
    o["has_c"] = r.has_c;
    o["c_d"] = field(r.c_d);
    o["c_m"] = field(r.c_m);
    o["both_ab_d"] = field(r.both_ab_d);
    o["distinct_a_count"] = field(r.distinct_a_count);
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

std::size_t write_report(const std::vector<ScanRecord>& records, Format format,
                         const std::string& path) {
  if (records.empty()) throw domain_error("write_report: no records");
  std::ostringstream buf;
  if (format == Format::Csv)
    write_csv(records, buf);
  else
    write_json(records, buf);
  const std::string body = buf.str();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw resource_error("write_report: cannot open " + path);
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  out.flush();
  if (!out) throw resource_error("write_report: write failed for " + path);
  return body.size();
}

std::vector<ScanRecord> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw domain_error("parse_csv: missing or wrong header");
  std::vector<ScanRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (line.back() == ',') cells.emplace_back();
    if (cells.size() != 16)
      throw domain_error("parse_csv: expected 16 cells, got " + std::to_string(cells.size()));
    ScanRecord r;
    r.n = std::stoll(cells[0]);
    r.prime = cell_to_bool(cells[1]);
    r.k = cell_to_opt(cells[2]);
    r.has_a = cell_to_bool(cells[3]);
    r.a_t = cell_to_opt(cells[4]);
    r.a_w = cell_to_opt(cells[5]);
    r.a_d = cell_to_opt(cells[6]);
    r.has_b = cell_to_bool(cells[7]);
    r.b_d = cell_to_opt(cells[8]);
    r.b_n = cell_to_opt(cells[9]);
    r.b_u = cell_to_opt(cells[10]);
    r.has_c = cell_to_bool(cells[11]);
    r.c_d = cell_to_opt(cells[12]);
    r.c_m = cell_to_opt(cells[13]);
    r.both_ab_d = cell_to_opt(cells[14]);
    r.distinct_a_count = cell_to_opt(cells[15]);
    out.push_back(r);
  }
  return out;
}

std::vector<ScanRecord> parse_json(std::istream& is) {
  ojson arr = ojson::parse(is);
  if (!arr.is_array()) throw domain_error("parse_json: top-level value must be an array");
  std::vector<ScanRecord> out;
  for (const auto& o : arr) {
    ScanRecord r;
    r.n = o.at("n").get<i64>();
    r.prime = o.at("prime").get<bool>();
    r.k = opt_from(o, "k");
    r.has_a = o.at("has_a").get<bool>();
    r.a_t = opt_from(o, "a_t");
    r.a_w = opt_from(o, "a_w");
    r.a_d = opt_from(o, "a_d");
    r.has_b = o.at("has_b").get<bool>();
    r.b_d = opt_from(o, "b_d");
    r.b_n = opt_from(o, "b_n");
    r.b_u = opt_from(o, "b_u");
    r.has_c = o.at("has_c").get<bool>();
    r.c_d = opt_from(o, "c_d");
    r.c_m = opt_from(o, "c_m");
    r.both_ab_d = opt_from(o, "both_ab_d");
    r.distinct_a_count = opt_from(o, "distinct_a_count");
    out.push_back(r);
  }
  return out;
}

}  // namespace es::scan
