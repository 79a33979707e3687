#include "es/cli.hpp"

#include <cctype>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "es/core.hpp"
#include "es/egyptian.hpp"
#include "es/polyform.hpp"
#include "es/scan.hpp"
#include "es/type_a.hpp"
#include "es/type_b.hpp"
#include "es/type_c.hpp"

namespace es::cli {

namespace {

using ojson = nlohmann::ordered_json;

ojson triple_json(const core::SolutionTriple& t) {
  return ojson{{"x", t.x}, {"y", t.y}, {"z", t.z}};
}

void print_triple(std::ostream& out, const core::SolutionTriple& t) {
  out << t.x << ' ' << t.y << ' ' << t.z << '\n';
}

i64 parse_i64(const std::string& s) {
  std::size_t pos = 0;
  const i64 v = std::stoll(s, &pos);
  if (pos != s.size()) throw domain_error("not an integer: '" + s + "'");
  return v;
}

polyform::Poly poly_from(std::string name) {
  if (name.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(name[0]))) {
      case 'p': return polyform::Poly::P;
      case 'q': return polyform::Poly::Q;
      case 'r': return polyform::Poly::R;
      case 's': return polyform::Poly::S;
      default: break;
    }
  }
  throw domain_error("unknown polynomial '" + name + "' (use p, q, r or s)");
}

const char* poly_name(polyform::Poly id) {
  switch (id) {
    case polyform::Poly::P: return "p";
    case polyform::Poly::Q: return "q";
    case polyform::Poly::R: return "r";
    case polyform::Poly::S: return "s";
  }
  return "?";
}

std::vector<const char*> poly_arg_names(polyform::Poly id) {
  if (arity(id) == 4) return {"x", "y", "t", "z"};
  return {"x", "y", "t"};
}

std::optional<core::SolutionTriple> solve_one(i64 n) {
  if (n < 1) throw domain_error("solve: n must be positive");
  if (n == 1) return std::nullopt;  // 4/1 exceeds any three unit fractions
  if (n % 2 == 0) return egyptian::even_identity(n);
  if (n % 4 == 3) return egyptian::mod4_identity(n);
  if (auto aw = type_a::find_first_witness(n)) return type_a::to_triple(*aw);
  if (auto fw = type_b::factor_search(n))
    return type_b::to_triple(type_b::witness_from_factor(n, *fw));
  if (auto cw = type_c::find_witness(n)) return type_c::to_triple(*cw);
  const auto all = core::enumerate_all(n);
  if (!all.empty()) return all.front();
  return std::nullopt;
}

struct SearchHit {
  char type = '?';
  ojson witness;
  core::SolutionTriple triple;
};

std::optional<SearchHit> search_a(i64 n) {
  if (n % 4 == 1 && n >= 5) {
    if (auto w = type_a::find_first_witness(n)) {
      return SearchHit{'a',
                       ojson{{"t", w->t}, {"w", w->w}, {"d", w->d},
                             {"n", w->n}, {"u", w->u}, {"v", w->v}},
                       type_a::to_triple(*w)};
    }
    return std::nullopt;
  }
  if (auto w = type_a::congruence_search(n)) {
    return SearchHit{'a',
                     ojson{{"d", w->d}, {"n", w->n}, {"u", w->u}, {"v", w->v}},
                     type_a::to_triple(*w)};
  }
  return std::nullopt;
}

std::optional<SearchHit> search_b(i64 n) {
  if (n % 4 == 1 && n >= 5) {
    if (auto fw = type_b::factor_search(n)) {
      const auto w = type_b::witness_from_factor(n, *fw);
      return SearchHit{'b',
                       ojson{{"t", fw->t}, {"a_div", fw->a_div}, {"b_div", fw->b_div},
                             {"d", w.d}, {"n", w.n}, {"u", w.u}},
                       type_b::to_triple(w)};
    }
    return std::nullopt;
  }
  if (auto w = type_b::congruence_search(n)) {
    return SearchHit{'b', ojson{{"d", w->d}, {"n", w->n}, {"u", w->u}},
                     type_b::to_triple(*w)};
  }
  return std::nullopt;
}

std::optional<SearchHit> search_c(i64 n) {
  if (auto w = type_c::find_witness(n)) {
    return SearchHit{'c',
                     ojson{{"t", w->t}, {"d", w->d}, {"m", w->m}, {"v", w->v}},
                     type_c::to_triple(*w)};
  }
  return std::nullopt;
}

void print_hit(std::ostream& out, const SearchHit& hit) {
  out << "type " << hit.type << ':';
  for (const auto& [key, value] : hit.witness.items())
    out << ' ' << key << '=' << value.get<i64>();
  out << '\n' << "triple: ";
  print_triple(out, hit.triple);
}

int report_search(std::ostream& out, i64 n, const std::string& type,
                  const std::optional<SearchHit>& hit, bool json) {
  if (json) {
    ojson o{{"n", n}, {"found", hit.has_value()}};
    if (hit) {
      o["type"] = std::string(1, hit->type);
      o["witness"] = hit->witness;
      o["triple"] = triple_json(hit->triple);
    }
    out << o.dump(2) << '\n';
    return hit ? 0 : 1;
  }
  if (!hit) {
    if (type == "any")
      out << "no witness\n";
    else
      out << "no Type " << static_cast<char>(std::toupper(type[0])) << " witness\n";
    return 1;
  }
  print_hit(out, *hit);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"structure toolkit for 4/n = 1/x + 1/y + 1/z over positive integers"};
  app.name("es");
  app.require_subcommand(1);

  // verify
  i64 v_n = 0, v_x = 0, v_y = 0, v_z = 0;
  bool v_json = false;
  auto* cmd_verify = app.add_subcommand("verify", "check 4/n == 1/x + 1/y + 1/z exactly");
  cmd_verify->add_option("n", v_n)->required();
  cmd_verify->add_option("x", v_x)->required();
  cmd_verify->add_option("y", v_y)->required();
  cmd_verify->add_option("z", v_z)->required();
  cmd_verify->add_flag("--json", v_json, "JSON output");

  // solve
  i64 s_n = 0;
  bool s_json = false;
  auto* cmd_solve = app.add_subcommand("solve", "produce one verified triple for 4/n");
  cmd_solve->add_option("n", s_n)->required();
  cmd_solve->add_flag("--json", s_json, "JSON output");

  // search
  i64 se_n = 0;
  std::string se_type = "any";
  bool se_json = false;
  auto* cmd_search = app.add_subcommand("search", "first structured witness for 4/n");
  cmd_search->add_option("n", se_n)->required();
  cmd_search->add_option("--type", se_type, "witness family: a, b, c or any")
      ->check(CLI::IsMember({"a", "b", "c", "any"}));
  cmd_search->add_flag("--json", se_json, "JSON output");

  // scan
  i64 sc_from = 2, sc_to = -1;
  bool sc_primes = false, sc_full = false, sc_counts = false, sc_json = false;
  int sc_workers = 1, sc_conjecture = 0;
  std::string sc_out, sc_format = "csv";
  i64 sc_sieve = arith::kDefaultSieveLimit;
  auto* cmd_scan = app.add_subcommand("scan", "classify a denominator range into a report");
  cmd_scan->add_option("--from", sc_from, "range start (default 2)");
  auto* opt_to = cmd_scan->add_option("--to", sc_to, "range end (inclusive)");
  auto* opt_full = cmd_scan->add_flag("--full", sc_full, "scan up to 104729");
  opt_to->excludes(opt_full);
  cmd_scan->add_flag("--primes-only", sc_primes, "primes instead of all n = 1 (mod 4)");
  cmd_scan->add_flag("--counts", sc_counts, "count distinct divisor-form triples per n");
  cmd_scan->add_option("--workers", sc_workers, "worker threads (default 1)");
  cmd_scan->add_option("--conjecture", sc_conjecture,
                       "report primes missing every congruence family (1 or 2)")
      ->check(CLI::Range(1, 2));
  cmd_scan->add_option("--out", sc_out, "write the report to this path");
  cmd_scan->add_option("--format", sc_format, "report format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_scan->add_flag("--json", sc_json, "shorthand for --format json");
  cmd_scan->add_option("--sieve-limit", sc_sieve, "factor table ceiling")
      ->envname("ES_SIEVE_LIMIT");

  // chain
  i64 ch_n = 0, ch_cap = 20;
  bool ch_json = false;
  auto* cmd_chain = app.add_subcommand(
      "chain", "solved consecutive run ending at 4(n!-1)+4");
  cmd_chain->add_option("n", ch_n)->required();
  cmd_chain->add_option("--cap", ch_cap, "factorial guard (default 20)");
  cmd_chain->add_flag("--json", ch_json, "JSON output");

  // poly
  auto* cmd_poly = app.add_subcommand("poly", "polynomial family p, q, r, s");
  cmd_poly->require_subcommand(1);
  std::string pe_name;
  std::vector<i64> pe_args;
  bool pe_json = false;
  auto* cmd_poly_eval = cmd_poly->add_subcommand("eval", "evaluate at a point");
  cmd_poly_eval->add_option("poly", pe_name, "p, q, r or s")->required();
  cmd_poly_eval->add_option("args", pe_args, "x y t (r: x y t z)")->expected(-1);
  cmd_poly_eval->add_flag("--json", pe_json, "JSON output");

  std::string pp_name;
  i64 pp_target = 0;
  bool pp_json = false;
  auto* cmd_poly_pre = cmd_poly->add_subcommand("preimage", "first argument tuple hitting a value");
  cmd_poly_pre->add_option("poly", pp_name, "p, q, r or s")->required();
  cmd_poly_pre->add_option("target", pp_target)->required();
  cmd_poly_pre->add_flag("--json", pp_json, "JSON output");

  i64 pg_s = 0, pg_t = 0;
  bool pg_json = false;
  auto* cmd_poly_gap = cmd_poly->add_subcommand("gap", "solved pair at distance 4s");
  cmd_poly_gap->add_option("s", pg_s)->required();
  cmd_poly_gap->add_option("t", pg_t)->required();
  cmd_poly_gap->add_flag("--json", pg_json, "JSON output");

  // dual
  i64 d_a = 0, d_d = 0, d_n = 0;
  bool d_json = false;
  auto* cmd_dual = app.add_subcommand("dual", "companion congruence of a witness (a, d, n)");
  cmd_dual->add_option("a", d_a)->required();
  cmd_dual->add_option("d", d_d)->required();
  cmd_dual->add_option("n", d_n)->required();
  cmd_dual->add_flag("--json", d_json, "JSON output");

  // jacobi
  std::string j_a;
  i64 j_m = 0;
  bool j_json = false;
  auto* cmd_jacobi = app.add_subcommand("jacobi", "Jacobi symbol (a|m), odd positive m");
  cmd_jacobi->add_option("a", j_a)->required();
  cmd_jacobi->add_option("m", j_m)->required();
  cmd_jacobi->add_flag("--json", j_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_verify->parsed()) {
      const bool ok = core::verify(v_n, v_x, v_y, v_z);
      if (v_json)
        out << ojson{{"n", v_n}, {"x", v_x}, {"y", v_y}, {"z", v_z}, {"valid", ok}}.dump(2)
            << '\n';
      else
        out << (ok ? "true" : "false") << '\n';
      return ok ? 0 : 1;
    }

    if (cmd_solve->parsed()) {
      const auto t = solve_one(s_n);
      if (s_json) {
        ojson o{{"n", s_n}, {"found", t.has_value()}};
        if (t) o["triple"] = triple_json(*t);
        out << o.dump(2) << '\n';
      } else if (t) {
        print_triple(out, *t);
      } else {
        out << "no solution\n";
      }
      return t ? 0 : 1;
    }

    if (cmd_search->parsed()) {
      std::optional<SearchHit> hit;
      if (se_type == "a") {
        hit = search_a(se_n);
      } else if (se_type == "b") {
        hit = search_b(se_n);
      } else if (se_type == "c") {
        hit = search_c(se_n);
      } else {
        hit = search_a(se_n);
        if (!hit) hit = search_b(se_n);
        if (!hit && se_n % 4 == 1 && se_n >= 5) hit = search_c(se_n);
      }
      return report_search(out, se_n, se_type, hit, se_json);
    }

    if (cmd_scan->parsed()) {
      i64 hi = sc_to;
      if (sc_full) hi = 104729;
      if (hi < 0) {
        err << "scan: --to or --full is required\n";
        return 2;
      }
      if (sc_json) sc_format = "json";
      if (sc_conjecture != 0) {
        const auto bad = scan::find_counterexamples(hi, sc_conjecture, sc_workers, sc_sieve);
        if (sc_format == "json") {
          ojson arr = ojson::array();
          for (const auto& ce : bad)
            arr.push_back(ojson{{"p", ce.p},
                                {"a_d_max", ce.a_d_max},
                                {"b_d_max", ce.b_d_max},
                                {"t_max", ce.t_max}});
          out << ojson{{"limit", hi}, {"conjecture", sc_conjecture}, {"counterexamples", arr}}
                     .dump(2)
              << '\n';
        } else if (bad.empty()) {
          out << "no counterexamples up to " << hi << " (conjecture " << sc_conjecture
              << ")\n";
        } else {
          for (const auto& ce : bad)
            out << "counterexample p=" << ce.p << " a_d_max=" << ce.a_d_max
                << " b_d_max=" << ce.b_d_max << " t_max=" << ce.t_max << '\n';
        }
        return 0;
      }
      scan::Options opt;
      opt.lo = sc_from;
      opt.hi = hi;
      opt.filter = sc_primes ? scan::Filter::PrimesOnly : scan::Filter::All4k1;
      opt.workers = sc_workers;
      opt.with_counts = sc_counts;
      opt.sieve_limit = sc_sieve;
      const auto records = scan::scan_range(opt);
      const auto fmt = sc_format == "json" ? scan::Format::Json : scan::Format::Csv;
      if (!sc_out.empty()) {
        const auto bytes = scan::write_report(records, fmt, sc_out);
        out << "wrote " << bytes << " bytes to " << sc_out << '\n';
      } else if (fmt == scan::Format::Json) {
        scan::write_json(records, out);
      } else {
        scan::write_csv(records, out);
      }
      return 0;
    }

    if (cmd_chain->parsed()) {
      const auto entries = egyptian::chain(ch_n, ch_cap);
      if (ch_json) {
        ojson arr = ojson::array();
        for (const auto& e : entries) {
          ojson o{{"m", e.value}};
          o["triple"] = triple_json(e.triple);
          arr.push_back(std::move(o));
        }
        out << arr.dump(2) << '\n';
      } else {
        for (const auto& e : entries) {
          out << e.value << ": ";
          print_triple(out, e.triple);
        }
      }
      return 0;
    }

    if (cmd_poly_eval->parsed()) {
      const auto id = poly_from(pe_name);
      if (static_cast<int>(pe_args.size()) != polyform::arity(id))
        throw domain_error(std::string("poly eval ") + poly_name(id) + " takes " +
                           std::to_string(polyform::arity(id)) + " arguments");
      const i64 value = polyform::eval(id, pe_args);
      if (pe_json)
        out << ojson{{"poly", poly_name(id)}, {"args", pe_args}, {"value", value}}.dump(2)
            << '\n';
      else
        out << value << '\n';
      return 0;
    }

    if (cmd_poly_pre->parsed()) {
      const auto id = poly_from(pp_name);
      const auto args = polyform::preimage_search(pp_target, id);
      if (pp_json) {
        ojson o{{"poly", poly_name(id)}, {"target", pp_target}, {"found", args.has_value()}};
        if (args) {
          ojson w;
          const auto names = poly_arg_names(id);
          for (std::size_t i = 0; i < args->size(); ++i) w[names[i]] = (*args)[i];
          o["args"] = std::move(w);
        }
        out << o.dump(2) << '\n';
        return args ? 0 : 1;
      }
      if (!args) {
        out << "no preimage\n";
        return 1;
      }
      const auto names = poly_arg_names(id);
      for (std::size_t i = 0; i < args->size(); ++i)
        out << (i ? " " : "") << names[i] << '=' << (*args)[i];
      out << '\n';
      return 0;
    }

    if (cmd_poly_gap->parsed()) {
      const auto gp = polyform::gap_pair(pg_s, pg_t);
      if (pg_json) {
        ojson o{{"s", pg_s}, {"t", pg_t}, {"n", gp.n}, {"n_prime", gp.n_prime}};
        o["triple_n"] = triple_json(gp.triple_n);
        o["triple_n_prime"] = triple_json(gp.triple_n_prime);
        out << o.dump(2) << '\n';
      } else {
        out << "n  = " << gp.n << ": ";
        print_triple(out, gp.triple_n);
        out << "n' = " << gp.n_prime << ": ";
        print_triple(out, gp.triple_n_prime);
        out << "difference: " << (gp.n - gp.n_prime) << '\n';
      }
      return 0;
    }

    if (cmd_dual->parsed()) {
      const auto dc = type_b::dual_witness(d_a, d_d, d_n);
      if (d_json)
        out << ojson{{"n2", dc.n2}, {"modulus2", dc.modulus2}}.dump(2) << '\n';
      else
        out << "n'=" << dc.n2 << " modulus'=" << dc.modulus2 << '\n';
      return 0;
    }

    if (cmd_jacobi->parsed()) {
      const int sym = arith::jacobi(parse_i64(j_a), j_m);
      if (j_json)
        out << ojson{{"a", parse_i64(j_a)}, {"m", j_m}, {"value", sym}}.dump(2) << '\n';
      else
        out << sym << '\n';
      return 0;
    }

    err << "es: no command given\n";
    return 2;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const arithmetic_error& e) {
    err << "arithmetic error: " << e.what() << '\n';
    return 3;
  } catch (const resource_error& e) {
    err << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace es::cli
