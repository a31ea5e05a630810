// Command-line surface: enumerate partitions, evaluate statistics, compute
// means by closed form / engine / brute force / sampling, emit tables, and run
// the verification ledger.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partstat/asymptotics.hpp"
#include "partstat/closedforms.hpp"
#include "partstat/qpoly.hpp"
#include "partstat/sampler.hpp"
#include "partstat/serialize.hpp"
#include "partstat/verify.hpp"
#include "partstat/zmean.hpp"

namespace {

using namespace partstat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

std::size_t default_table_n() {
  if (const char* env = std::getenv("PARTSTAT_TABLE_N")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 64;
}

formula_variant parse_variant(const std::string& name) {
  if (name == "canonical") return formula_variant::canonical;
  if (name == "theorem") return formula_variant::theorem;
  if (name == "derivation") return formula_variant::derivation;
  throw CLI::ValidationError("--variant must be canonical, theorem or derivation");
}

struct mean_flags {
  std::string stat_token = "los";
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::string method = "all";
  std::string variant = "canonical";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t trials = 100000;
};

int run_mean(const mean_flags& f) {
  statistic s = statistic::parse(f.stat_token);
  formula_variant variant = parse_variant(f.variant);
  bool want_closed = f.method == "closed" || f.method == "all";
  bool want_engine = f.method == "engine" || f.method == "all";
  bool want_brute = f.method == "brute" || f.method == "all";
  bool want_sample = f.method == "sample";
  if (!want_closed && !want_engine && !want_brute && !want_sample)
    throw CLI::ValidationError("--method must be closed, engine, brute, sample or all");
  if (s.id() == statistic::kind::blocks && f.method == "engine")
    throw CLI::ValidationError("blocks is not a Z-statistic; the engine does not apply");

  std::size_t need = f.n + 2;
  count_tables tables(std::max(default_table_n(), need));

  std::optional<exact_rat> closed, engine, brute;
  if (want_closed) {
    closed = f.k ? closed_mean_k(s, f.n, *f.k, tables, variant)
                 : closed_mean(s, f.n, tables, variant);
    if (f.method == "closed" && !closed)
      throw CLI::ValidationError("no closed form for " + s.token());
  }
  if (want_engine && s.id() != statistic::kind::blocks) {
    v_sequence v = has_v2_closed(s) && s.depth() == 2 ? v2_closed_sequence(s, f.n)
                                                      : v_enumerated(s, s.depth(), f.n);
    engine = f.k ? mean_nk_engine(v, f.n, *f.k, tables).mean : mean_n_engine(v, f.n, tables).mean;
  }
  if (want_brute) {
    exact_int total = 0;
    exact_int count = 0;
    auto tally = [&](const set_partition& p) {
      total += s(p);
      ++count;
    };
    if (f.k)
      for_each_partition_k(f.n, *f.k, tally);
    else
      for_each_partition(f.n, tally);
    if (count == 0) throw CLI::ValidationError("empty family: nothing to average");
    brute = exact_rat(total, count);
  }

  mean_report report;
  report.n = f.n;
  report.k = f.k;
  if (want_sample) {
    sampler_config cfg{f.n, f.k, f.seed, f.trials};
    auto est = empirical_mean(s, cfg, tables);
    if (f.format == "json") {
      std::cout << to_json(est).dump() << "\n";
    } else {
      std::cout << "empirical " << format_double(est.mean) << " stderr "
                << format_double(est.stderr_of_mean) << " trials " << est.trials << "\n";
    }
    return kExitOk;
  }

  // choose the primary value for the report: closed, then engine, then brute
  exact_rat primary = closed ? *closed : (engine ? *engine : *brute);
  report.mean = primary;
  report.mean_float = exact_to_double(primary);
  const exact_int& denom =
      f.k ? tables.stirling(static_cast<std::int64_t>(f.n), static_cast<std::int64_t>(*f.k))
          : tables.bell(static_cast<std::int64_t>(f.n));
  report.total = boost::multiprecision::numerator(primary) *
                 (denom / boost::multiprecision::denominator(primary));
  if (f.n >= 3) {
    try {
      report.asymptotic =
          f.k ? asymptotic_mean_k(s, f.n, *f.k) : asymptotic_mean(s, f.n);
    } catch (const std::exception&) {
      report.asymptotic.reset();
    }
  }

  bool mismatch = false;
  std::vector<std::pair<std::string, exact_rat>> shown;
  if (closed) shown.emplace_back("closed", *closed);
  if (engine) shown.emplace_back("engine", *engine);
  if (brute) shown.emplace_back("brute", *brute);
  for (std::size_t i = 1; i < shown.size(); ++i)
    if (shown[i].second != shown[0].second) mismatch = true;
  if (shown.size() >= 2) {
    report.oracle = mismatch ? oracle_verdict::mismatch : oracle_verdict::match;
    if (mismatch) {
      std::string d;
      for (const auto& [name, val] : shown) d += name + "=" + to_fraction_string(val) + " ";
      report.oracle_detail = d;
    }
  }

  if (f.format == "json") {
    std::cout << to_json(report).dump() << "\n";
  } else {
    for (const auto& [name, val] : shown)
      std::cout << name << " " << to_fraction_string(val) << "\n";
    if (report.asymptotic)
      std::cout << "asymptotic " << format_double(*report.asymptotic) << "\n";
    if (report.oracle)
      std::cout << "verdict " << (mismatch ? "MISMATCH" : "match") << "\n";
  }
  return mismatch ? kExitMismatch : kExitOk;
}

int run_verify(std::size_t max_n, std::size_t trials, std::uint64_t seed) {
  verify_options opt;
  opt.max_n = max_n;
  opt.sampler_trials = trials;
  opt.seed = seed;
  auto results = run_verification(opt);
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    if (!r.ok) ++failures;
  }
  std::cout << (failures == 0 ? "verification passed: " : "verification FAILED: ")
            << (results.size() - failures) << "/" << results.size() << " checks\n";
  return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact means of set-partition statistics"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream partitions of [n]");
  std::size_t en_n = 0;
  std::optional<std::size_t> en_k;
  std::optional<std::size_t> en_m;
  std::string en_format = "text";
  enumerate->add_option("--n", en_n, "ground set size (ignored with --regular-m)");
  enumerate->add_option("--k", en_k, "restrict to k blocks");
  enumerate->add_option("--regular-m", en_m, "enumerate partitions of [mk] into k blocks of size m");
  enumerate->add_option("--format", en_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // stat
  auto* stat_cmd = app.add_subcommand("stat", "evaluate a statistic on one partition");
  std::string st_token = "los";
  std::string st_partition;
  std::string st_format = "text";
  stat_cmd->add_option("--stat", st_token,
                       "los|inv|crol|croc|nest2|ov|emb|semb|blocks|occ:<pat>|klazar:<rgf>");
  stat_cmd->add_option("partition", st_partition, "rgf like \"1 2 1 2\" or blocks like \"1 3/2 4\"")
      ->required();
  stat_cmd->add_option("--format", st_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // mean
  auto* mean_cmd = app.add_subcommand("mean", "exact mean of a statistic");
  mean_flags mf;
  mean_cmd->add_option("--stat", mf.stat_token, "statistic token");
  mean_cmd->add_option("--n", mf.n, "ground set size")->required();
  mean_cmd->add_option("--k", mf.k, "block count (omit for the all-partitions mean)");
  mean_cmd->add_option("--method", mf.method, "closed, engine, brute, sample or all");
  mean_cmd->add_option("--variant", mf.variant, "canonical, theorem or derivation");
  mean_cmd->add_option("--format", mf.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  mean_cmd->add_option("--seed", mf.seed, "sampler seed (method=sample)");
  mean_cmd->add_option("--trials", mf.trials, "sampler trials (method=sample)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the verification ledger");
  std::size_t v_max_n = 8;
  std::size_t v_trials = 100000;
  std::uint64_t v_seed = 20250809;
  verify_cmd->add_option("--max-n", v_max_n, "exhaustive-suite bound (default 8)");
  verify_cmd->add_option("--trials", v_trials, "sampler trials");
  verify_cmd->add_option("--seed", v_seed, "sampler seed");

  // asymptotics
  auto* asym_cmd = app.add_subcommand("asymptotics", "convergence table for a statistic");
  std::string as_token = "los";
  std::vector<std::size_t> as_grid{50, 100, 200, 400};
  std::optional<std::size_t> as_k;
  std::string as_format = "csv";
  asym_cmd->add_option("--stat", as_token, "statistic token");
  asym_cmd->add_option("--grid", as_grid, "ascending n values")->delimiter(',');
  asym_cmd->add_option("--k", as_k, "fixed block count (block-level table)");
  asym_cmd->add_option("--format", as_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw uniform random partitions");
  std::size_t sm_n = 0;
  std::optional<std::size_t> sm_k;
  std::size_t sm_trials = 1;
  std::uint64_t sm_seed = 0;
  std::optional<std::string> sm_stat;
  std::string sm_format = "text";
  sample_cmd->add_option("--n", sm_n, "ground set size")->required();
  sample_cmd->add_option("--k", sm_k, "block count (uniform over Pi_n^k)");
  sample_cmd->add_option("--trials", sm_trials, "number of draws");
  sample_cmd->add_option("--seed", sm_seed, "seed");
  sample_cmd->add_option("--stat", sm_stat, "report an empirical mean of this statistic instead");
  sample_cmd->add_option("--format", sm_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // table
  auto* table_cmd = app.add_subcommand("table", "emit bell/stirling/v-sequence/catalog tables");
  std::string tb_what = "bell";
  std::size_t tb_n = 20;
  std::string tb_stat = "los";
  std::string tb_format = "csv";
  table_cmd->add_option("--what", tb_what, "bell, stirling, vseq, qstirling or catalog")
      ->check(CLI::IsMember({"bell", "stirling", "vseq", "qstirling", "catalog"}));
  table_cmd->add_option("--n", tb_n, "table size");
  table_cmd->add_option("--stat", tb_stat, "statistic for vseq");
  table_cmd->add_option("--format", tb_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) {
      std::size_t count = 0;
      auto emit = [&](const set_partition& p) {
        ++count;
        if (en_format == "json")
          std::cout << nlohmann::json{{"rgf", to_rgf_string(p)}, {"blocks", to_block_string(p)}}
                           .dump()
                    << "\n";
        else
          std::cout << to_rgf_string(p) << "\t" << to_block_string(p) << "\n";
      };
      if (en_m) {
        for_each_regular(*en_m, en_k.value_or(0), emit);
      } else if (en_k) {
        for_each_partition_k(en_n, *en_k, emit);
      } else {
        for_each_partition(en_n, emit);
      }
      if (en_format == "text") std::cout << "# count: " << count << "\n";
      return kExitOk;
    }

    if (*stat_cmd) {
      statistic s = statistic::parse(st_token);
      set_partition p = parse_partition(st_partition);
      std::uint64_t value = s(p);
      if (st_format == "json")
        std::cout << nlohmann::json{{"stat", s.token()}, {"rgf", to_rgf_string(p)},
                                    {"value", value}}
                         .dump()
                  << "\n";
      else
        std::cout << value << "\n";
      return kExitOk;
    }

    if (*mean_cmd) return run_mean(mf);

    if (*verify_cmd) return run_verify(v_max_n, v_trials, v_seed);

    if (*asym_cmd) {
      statistic s = statistic::parse(as_token);
      std::size_t max_n = 0;
      for (std::size_t n : as_grid) max_n = std::max(max_n, n);
      count_tables tables(std::max(default_table_n(), max_n + 2));
      auto rows = as_k ? convergence_report_k(s, *as_k, as_grid, tables)
                       : convergence_report(s, as_grid, tables);
      if (as_format == "csv")
        std::cout << csv_header_convergence() << "\n";
      else
        std::printf("%6s  %18s  %18s  %10s  %10s\n", "n", "exact", "leading", "ratio",
                    "corr_ratio");
      for (const auto& r : rows) {
        if (as_format == "csv") {
          std::cout << to_csv_row(r) << "\n";
        } else {
          std::printf("%6zu  %18.10g  %18.10g  %10.6f  %10.6f\n", r.n,
                      exact_to_double(r.exact), r.leading, r.ratio, r.correction_ratio);
        }
      }
      return kExitOk;
    }

    if (*sample_cmd) {
      count_tables tables(std::max(default_table_n(), sm_n + 1));
      if (sm_stat) {
        statistic s = statistic::parse(*sm_stat);
        sampler_config cfg{sm_n, sm_k, sm_seed, sm_trials};
        auto est = empirical_mean(s, cfg, tables);
        if (sm_format == "json")
          std::cout << to_json(est).dump() << "\n";
        else
          std::cout << "empirical " << format_double(est.mean) << " stderr "
                    << format_double(est.stderr_of_mean) << " trials " << est.trials << "\n";
        return kExitOk;
      }
      auto emit = [&](const set_partition& p) {
        if (sm_format == "json")
          std::cout << nlohmann::json{{"rgf", to_rgf_string(p)}}.dump() << "\n";
        else
          std::cout << to_rgf_string(p) << "\n";
      };
      if (sm_k) {
        partition_k_sampler sampler(sm_n, *sm_k, sm_seed);
        for (std::size_t t = 0; t < sm_trials; ++t) emit(sampler.next());
      } else {
        partition_sampler sampler(sm_n, sm_seed, tables);
        for (std::size_t t = 0; t < sm_trials; ++t) emit(sampler.next());
      }
      return kExitOk;
    }

    if (*table_cmd) {
      if (tb_what == "catalog") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : formula_catalog()) arr.push_back(to_json(f));
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
      }
      count_tables tables(std::max(tb_n, std::size_t{1}));
      if (tb_what == "bell") {
        std::cout << "n,bell\n";
        for (std::size_t n = 0; n <= tb_n; ++n)
          std::cout << n << "," << to_decimal_string(tables.bell(static_cast<std::int64_t>(n)))
                    << "\n";
      } else if (tb_what == "stirling") {
        std::cout << "n,k,stirling\n";
        for (std::size_t n = 0; n <= tb_n; ++n)
          for (std::size_t k = 0; k <= n; ++k)
            std::cout << n << "," << k << ","
                      << to_decimal_string(tables.stirling(static_cast<std::int64_t>(n),
                                                           static_cast<std::int64_t>(k)))
                      << "\n";
      } else if (tb_what == "qstirling") {
        std::cout << "n,k,coefficients\n";
        for (std::size_t n = 0; n <= tb_n; ++n)
          for (std::size_t k = 0; k <= n; ++k) {
            auto poly = q_stirling_poly(n, k);
            std::cout << n << "," << k << ",\"";
            for (std::size_t p = 0; p <= poly.degree(); ++p) {
              if (p) std::cout << " ";
              std::cout << to_decimal_string(poly.coeff(p));
            }
            std::cout << "\"\n";
          }
      } else {  // vseq
        statistic s = statistic::parse(tb_stat);
        std::cout << "m,v\n";
        if (has_v2_closed(s) && s.depth() == 2) {
          for (std::size_t m = 0; m <= tb_n; ++m)
            std::cout << m << "," << to_decimal_string(v2_closed(s, m)) << "\n";
        } else {
          auto v = v_enumerated(s, s.depth(), tb_n);
          for (std::size_t m = 0; m <= tb_n; ++m)
            std::cout << m << "," << to_decimal_string(v.values[m]) << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const unknown_statistic& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "statistic tokens: los inv crol croc nest2 ov emb semb blocks occ:<pattern> "
                 "klazar:<rgf>\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const partstat::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
