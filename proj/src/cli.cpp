#include "msidon/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "msidon/serialize.hpp"

namespace msidon::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

/// Accumulates the run report: parameters, verdicts, result payload,
/// artifact paths and per-phase timings.
class RunReport {
 public:
  explicit RunReport(const std::vector<std::string>& args) {
    doc_["schema"] = kReportSchema;
    doc_["command"] = args;
    doc_["parameters"] = json::object();
    doc_["verdicts"] = json::object();
    doc_["result"] = json::object();
    doc_["artifacts"] = json::array();
    doc_["timings_ms"] = json::object();
  }

  json& parameters() { return doc_["parameters"]; }
  json& verdicts() { return doc_["verdicts"]; }
  json& result() { return doc_["result"]; }

  void artifact(const std::string& kind, const std::string& path, const std::string& text) {
    write_file(path, text);
    doc_["artifacts"].push_back({{"kind", kind}, {"path", path}});
  }

  template <class F>
  auto timed(const std::string& phase, F&& f) {
    const auto t0 = Clock::now();
    if constexpr (std::is_void_v<std::invoke_result_t<F>>) {
      f();
      record(phase, t0);
    } else {
      auto r = f();
      record(phase, t0);
      return r;
    }
  }

  std::string dump() const { return doc_.dump(2) + "\n"; }

 private:
  void record(const std::string& phase, Clock::time_point t0) {
    doc_["timings_ms"][phase] = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  }

  json doc_;
};

// Shared options.
struct Common {
  std::string out;
  unsigned threads = 0;
  u64 sieve_cap = 0;  // 0: SIDON_SIEVE_CAP or the built-in default
};

SieveConfig sieve_config(const Common& c) {
  SieveConfig cfg = SieveConfig::from_env();
  if (c.sieve_cap) cfg.capacity = c.sieve_cap;
  cfg.threads = c.threads;
  return cfg;
}

json oracle_verdict(std::span<const u64> elements, u64 budget) {
  try {
    const auto w = find_product_conflict(elements, budget);
    if (!w) return true;
    return json{{"sidon", false}, {"witness", to_json(*w)}};
  } catch (const BudgetError&) {
    return "skipped: over product budget";
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiplicative Sidon sets with small gaps: constructions, certificates and scans", "msidon"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "Worker threads (default: available parallelism)");
  app.add_option("--sieve-cap", common.sieve_cap, "Sieve capacity (default SIDON_SIEVE_CAP or 1e8)");

  RunReport report(args);
  int code = kOk;
  std::function<void()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the run report here instead of stdout");
    sub->add_option("--threads", common.threads, "Worker threads");
  };
  auto add_sieve = [&](CLI::App* sub) {
    sub->add_option("--sieve-cap", common.sieve_cap, "Sieve capacity (default SIDON_SIEVE_CAP or 1e8)");
  };

  // ---------------------------------------------------------------- primes
  auto* primes = app.add_subcommand("primes", "Prime sieve scans");
  primes->require_subcommand(1);

  u64 scan_from = 0, scan_to = 0;
  auto* scan = primes->add_subcommand("scan-bhp", "Check (x - x^(21/40), x] holds a prime for all x in range");
  scan->add_option("--from", scan_from)->required();
  scan->add_option("--to", scan_to)->required();
  add_common(scan);
  add_sieve(scan);
  scan->callback([&] {
    action = [&] {
      report.parameters() = {{"from", scan_from}, {"to", scan_to}};
      const PrimeTable table = report.timed("sieve", [&] { return PrimeTable(scan_to, sieve_config(common)); });
      const auto r = report.timed("scan", [&] { return bhp_scan(table, scan_from, scan_to); });
      report.result() = to_json(r);
      report.verdicts()["holds"] = r.holds;
      if (!r.holds) code = kVerifiedFalse;
    };
  });

  u64 lm_x = 0;
  std::string lm_alpha, lm_beta, lm_csv;
  double lm_c0 = 0;
  auto* lm = primes->add_subcommand("lm-sum", "Short-interval multiple count with distinctness check");
  lm->add_option("--x", lm_x)->required();
  lm->add_option("--alpha", lm_alpha, "Exponent as decimal or p/q")->required();
  lm->add_option("--beta", lm_beta, "Exponent as decimal or p/q")->required();
  lm->add_option("--c0", lm_c0);
  lm->add_option("--csv", lm_csv, "Also write per-m counts as CSV to this path");
  add_common(lm);
  add_sieve(lm);
  lm->callback([&] {
    action = [&] {
      const auto alpha = Exponent::parse(lm_alpha), beta = Exponent::parse(lm_beta);
      report.parameters() = {{"x", lm_x}, {"alpha", alpha.str()}, {"beta", beta.str()}, {"c0", lm_c0}};
      if (lm_x < 2) throw DomainError("lm-sum requires x >= 2");
      const u64 top = lm_x + floor_pow(lm_x, alpha);
      const PrimeTable table = report.timed("sieve", [&] { return PrimeTable(top, sieve_config(common)); });
      const auto r = report.timed("sum", [&] { return lm_sum(table, lm_x, alpha, beta, lm_c0); });
      report.result() = to_json(r);
      report.verdicts()["primes_distinct"] = r.primes_distinct;
      report.verdicts()["multiplier_inequality_holds"] = r.multiplier_inequality_holds;
      if (!lm_csv.empty()) {
        std::ostringstream csv;
        csv << "m,count\n";
        for (auto [m, c] : r.per_m_counts) csv << m << ',' << c << '\n';
        report.artifact("per_m_counts_csv", lm_csv, csv.str());
      }
      if (!r.primes_distinct) code = kVerifiedFalse;
    };
  });

  std::string list_lo, list_hi;
  auto* list = primes->add_subcommand("list", "Primes p with lo < p <= hi (real endpoints allowed)");
  list->add_option("--lo", list_lo)->required();
  list->add_option("--hi", list_hi)->required();
  add_common(list);
  add_sieve(list);
  list->callback([&] {
    action = [&] {
      const auto lo = Exponent::parse(list_lo), hi = Exponent::parse(list_hi);
      const Ratio rlo{lo.num(), lo.den()}, rhi{hi.num(), hi.den()};
      report.parameters() = {{"lo", lo.str()}, {"hi", hi.str()}};
      const PrimeTable table(rhi.floor(), sieve_config(common));
      const auto ps = table.primes_in(rlo, rhi);
      report.result() = {{"count", ps.size()}, {"primes", ps}};
    };
  });

  // ----------------------------------------------------------------- sidon
  auto* sidon = app.add_subcommand("sidon", "Sidon oracle and certificate checker");
  sidon->require_subcommand(1);

  std::string verify_in;
  u64 verify_budget = kDefaultProductBudget;
  auto* verify = sidon->add_subcommand("verify", "Brute-force product distinctness");
  verify->add_option("--input", verify_in, "Set JSON {n, elements}")->required();
  verify->add_option("--budget", verify_budget, "Maximum number of pair products");
  add_common(verify);
  verify->callback([&] {
    action = [&] {
      const SidonSet s = sidon_set_from_json(parse_json_text(read_file(verify_in)));
      report.parameters() = {{"input", verify_in}, {"budget", verify_budget}, {"n", s.n()}, {"size", s.size()}};
      const auto w = report.timed("oracle", [&] { return find_product_conflict(s.elements(), verify_budget); });
      report.verdicts()["sidon"] = !w.has_value();
      report.result()["gap"] = to_json(gap_measure(s));
      if (w) {
        report.result()["witness"] = to_json(*w);
        code = kVerifiedFalse;
      }
    };
  });

  std::string cert_in;
  auto* checkc = sidon->add_subcommand("check-cert", "Private-prime certificate check");
  checkc->add_option("--input", cert_in, "Certificate JSON {J, items}")->required();
  add_common(checkc);
  checkc->callback([&] {
    action = [&] {
      const auto c = certificate_from_json(parse_json_text(read_file(cert_in)));
      report.parameters() = {{"input", cert_in}, {"J", c.J}, {"items", c.items.size()}};
      const auto v = report.timed("check", [&] { return check_certificate(c); });
      report.verdicts()["valid"] = v.ok();
      report.result() = to_json(v);
      if (!v.ok()) code = kVerifiedFalse;
    };
  });

  // ------------------------------------------------------------- construct
  auto* construct = app.add_subcommand("construct", "Sidon set constructions");
  construct->require_subcommand(1);

  u64 elem_n = 0, elem_budget = 10'000'000;
  std::string elem_set_out;
  auto* elem = construct->add_subcommand("elementary", "{a <= n : a = 1 mod floor(sqrt n)}");
  elem->add_option("--n", elem_n)->required();
  elem->add_option("--budget", elem_budget, "Pair budget for the oracle cross-check");
  elem->add_option("--set-out", elem_set_out, "Write the set JSON here");
  add_common(elem);
  elem->callback([&] {
    action = [&] {
      report.parameters() = {{"n", elem_n}};
      const SidonSet s = report.timed("construct", [&] { return elementary(elem_n); });
      const GapReport g = gap_measure(s);
      report.result() = {{"set", to_json(s)}, {"gap", to_json(g)}, {"q", isqrt(elem_n)}};
      report.verdicts()["gap_at_most_isqrt"] = g.measure <= isqrt(elem_n);
      report.verdicts()["oracle"] = report.timed("oracle", [&] { return oracle_verdict(s.elements(), elem_budget); });
      if (!elem_set_out.empty()) report.artifact("set", elem_set_out, to_json(s).dump() + "\n");
      if (g.measure > isqrt(elem_n) || report.verdicts()["oracle"].is_object()) code = kVerifiedFalse;
    };
  });

  u64 cm_n = 0, cm_budget = 100'000'000;
  std::string cm_alpha, cm_beta, cm_delta, cm_set_out, cm_cert_out, cm_graph_out;
  double cm_eps = 0;
  auto* cm = construct->add_subcommand("matching", "Interval/prime matching construction");
  cm->add_option("--n", cm_n)->required();
  auto* o_alpha = cm->add_option("--alpha", cm_alpha, "Exponent as decimal or p/q");
  auto* o_beta = cm->add_option("--beta", cm_beta);
  cm->add_option("--delta", cm_delta, "Default: near the top of the admissible window");
  auto* o_eps = cm->add_option("--epsilon", cm_eps, "Derive (alpha, beta, delta) from epsilon");
  o_alpha->needs(o_beta);
  o_beta->needs(o_alpha);
  o_eps->excludes(o_alpha)->excludes(o_beta);
  cm->add_option("--budget", cm_budget, "Pair budget for the oracle cross-check");
  cm->add_option("--set-out", cm_set_out);
  cm->add_option("--cert-out", cm_cert_out);
  cm->add_option("--graph-out", cm_graph_out);
  add_common(cm);
  add_sieve(cm);
  cm->callback([&] {
    action = [&] {
      Exponent alpha(0, 1), beta(0, 1), delta(0, 1);
      json choice = nullptr;
      if (!o_eps->empty()) {
        const auto c = choose_exponents(cm_eps);
        alpha = c.alpha;
        beta = c.beta;
        delta = c.delta;
        choice = {{"epsilon", cm_eps}, {"eta", c.eta}, {"c0", c.c0}};
      } else if (!o_alpha->empty()) {
        alpha = Exponent::parse(cm_alpha);
        beta = Exponent::parse(cm_beta);
        delta = cm_delta.empty() ? best_delta(alpha) : Exponent::parse(cm_delta);
      } else {
        throw DomainError("construct matching needs --alpha/--beta or --epsilon");
      }
      const auto params = derive_params(cm_n, alpha, beta, delta);
      report.parameters() = to_json(params);
      if (!choice.is_null()) report.parameters()["choice"] = choice;
      const PrimeTable table = report.timed("sieve", [&] { return PrimeTable(cm_n, sieve_config(common)); });
      const auto o = report.timed("construct", [&] { return matching_construct(params, table); });
      report.result() = to_json(o);
      report.verdicts()["success"] = o.success;
      if (o.set) {
        report.result()["set"] = to_json(*o.set);
        report.verdicts()["oracle"] =
            report.timed("oracle", [&] { return oracle_verdict(o.set->elements(), cm_budget); });
        if (!cm_set_out.empty()) report.artifact("set", cm_set_out, to_json(*o.set).dump() + "\n");
      }
      if (o.certificate && !cm_cert_out.empty())
        report.artifact("certificate", cm_cert_out, to_json(*o.certificate).dump() + "\n");
      if (!cm_graph_out.empty()) report.artifact("graph", cm_graph_out, to_json(o.graph).dump() + "\n");
      if (!o.success || report.verdicts()["oracle"].is_object()) code = kVerifiedFalse;
    };
  });

  u64 t1_q = 0, t1_max = kDefaultAlgebraMaxQ;
  auto* t1 = construct->add_subcommand("check-theorem1", "Exhaustive index check for the progression set");
  t1->add_option("--q", t1_q)->required();
  t1->add_option("--max-q", t1_max, "Refuse q above this bound");
  add_common(t1);
  t1->callback([&] {
    action = [&] {
      report.parameters() = {{"q", t1_q}};
      const auto c = report.timed("check", [&] { return verify_theorem1_algebra(t1_q, t1_max); });
      report.verdicts()["holds"] = !c.has_value();
      if (c) {
        report.result()["counterexample"] = {{"i", c->i}, {"j", c->j}, {"k", c->k}, {"l", c->l}};
        code = kVerifiedFalse;
      }
    };
  });

  // ----------------------------------------------------------------- match
  auto* match = app.add_subcommand("match", "Bipartite matching and weighted Hall checks");
  match->require_subcommand(1);

  std::string graph_in, hall_L0;
  auto* mrun = match->add_subcommand("run", "Maximum matching, or a Hall deficiency witness");
  mrun->add_option("--graph", graph_in)->required();
  add_common(mrun);
  mrun->callback([&] {
    action = [&] {
      const auto g = graph_from_json(parse_json_text(read_file(graph_in)));
      report.parameters() = {{"graph", graph_in}, {"left", g.left_size()}, {"right", g.right_size()},
                             {"edges", g.edges().size()}};
      const auto m = report.timed("matching", [&] { return max_matching(g); });
      report.result()["matching"] = to_json(g, m);
      report.verdicts()["covers_left"] = m.covers_left();
      if (const auto d = deficiency_witness(g, m)) {
        report.result()["deficiency"] = to_json(g, *d);
        code = kVerifiedFalse;
      }
    };
  });

  auto* hall = match->add_subcommand("hall-check", "Weighted Hall row/column conditions, exact");
  hall->add_option("--graph", graph_in)->required();
  hall->add_option("--L0", hall_L0, "Threshold as p/q")->required();
  add_common(hall);
  hall->callback([&] {
    action = [&] {
      const auto g = graph_from_json(parse_json_text(read_file(graph_in)));
      const Rational L0 = parse_rational(hall_L0);
      report.parameters() = {{"graph", graph_in}, {"L0", L0.get_str()}};
      const auto h = report.timed("check", [&] { return weighted_hall_check(g, L0); });
      report.result() = to_json(g, h);
      report.verdicts()["rows_ok"] = h.rows_ok;
      report.verdicts()["cols_ok"] = h.cols_ok;
      if (!h.rows_ok || !h.cols_ok) code = kVerifiedFalse;
    };
  });

  // ----------------------------------------------------------------- exact
  auto* exact = app.add_subcommand("exact", "Exact desk-scale solvers");
  exact->require_subcommand(1);

  u64 ex_n = 0, ex_budget = kDefaultNodeBudget, table_to = 0;
  std::string table_out;
  auto* eg = exact->add_subcommand("g", "Exact g(n)");
  eg->add_option("--n", ex_n)->required();
  eg->add_option("--budget", ex_budget, "Search node budget");
  add_common(eg);
  eg->callback([&] {
    action = [&] {
      report.parameters() = {{"n", ex_n}, {"budget", ex_budget}};
      const auto r = report.timed("search", [&] { return exact_g(ex_n, ex_budget); });
      report.result() = to_json(r);
      report.result()["log_n"] = std::log(static_cast<double>(ex_n));
      report.verdicts()["proven_optimal"] = r.proven_optimal;
    };
  });

  auto* ems = exact->add_subcommand("max-size", "Largest Sidon subset of [n]");
  ems->add_option("--n", ex_n)->required();
  ems->add_option("--budget", ex_budget, "Search node budget");
  add_common(ems);
  ems->callback([&] {
    action = [&] {
      report.parameters() = {{"n", ex_n}, {"budget", ex_budget}};
      const auto r = report.timed("search", [&] { return max_sidon_size(ex_n, ex_budget); });
      const auto pi = static_cast<long long>(small_primes(ex_n).size());
      report.result() = to_json(r);
      report.result()["pi_n"] = pi;
      report.result()["excess"] = static_cast<long long>(r.value) - pi;
      report.verdicts()["proven_optimal"] = r.proven_optimal;
    };
  });

  auto* et = exact->add_subcommand("table", "CSV of g(n) and maximum sizes for n = 1..N");
  et->add_option("--to", table_to)->required();
  et->add_option("--out", table_out, "CSV path")->required();
  et->add_option("--budget", ex_budget, "Search node budget per n");
  et->add_option("--threads", common.threads, "Worker threads");
  et->callback([&] {
    action = [&] {
      report.parameters() = {{"to", table_to}, {"budget", ex_budget}};
      const auto rows = report.timed("solve", [&] { return exact_table(table_to, ex_budget, common.threads); });
      u64 certified = 0;
      while (certified < rows.size() && rows[certified].g.proven_optimal && rows[certified].max_size.proven_optimal)
        ++certified;
      report.artifact("table_csv", table_out, table_csv(rows));
      report.result() = {{"rows", rows.size()}, {"certified_prefix", certified}};
      report.verdicts()["all_proven"] = certified == rows.size();
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!action) throw DomainError("no command selected");
    action();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kUsage;
  }

  const std::string text = report.dump();
  if (common.out.empty()) {
    out << text;
  } else {
    try {
      write_file(common.out, text);
    } catch (const DomainError& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace msidon::cli
