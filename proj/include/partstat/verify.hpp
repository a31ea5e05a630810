#pragma once

// The verification ledger behind the `verify` CLI verb: counting identities,
// the Z-property suite, the closed = engine = brute-force triangle, connecting
// relations, equidistribution pairs, erratum witnesses, and sampler statistics.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "partstat/closedforms.hpp"
#include "partstat/enumerate.hpp"
#include "partstat/exact.hpp"
#include "partstat/qpoly.hpp"
#include "partstat/sampler.hpp"
#include "partstat/statistics.hpp"
#include "partstat/zmean.hpp"

namespace partstat {

struct verify_options {
  std::size_t max_n = 8;  // cap for enumeration-exhaustive suites
  std::size_t sampler_trials = 100000;
  std::uint64_t seed = 20250809;
};

struct check_result {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace verify_detail {

inline std::vector<statistic> catalog() {
  using k = statistic::kind;
  return {statistic::make(k::los),  statistic::make(k::inv), statistic::make(k::crol),
          statistic::make(k::croc), statistic::make(k::nest2), statistic::make(k::ov),
          statistic::make(k::emb),  statistic::make(k::strong_emb)};
}

inline std::vector<statistic> occ_patterns(std::size_t max_r) {
  std::vector<statistic> out;
  for (std::size_t r = 2; r <= max_r; ++r) {
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
      std::vector<letter> sigma(r);
      bool has1 = false, has2 = false;
      for (std::size_t i = 0; i < r; ++i) {
        sigma[i] = (mask >> i) & 1 ? 2 : 1;
        (sigma[i] == 1 ? has1 : has2) = true;
      }
      if (has1 && has2) out.push_back(statistic::make_occ(std::move(sigma)));
    }
  }
  return out;
}

inline std::vector<set_partition> klazar_two_block_patterns(std::size_t max_r) {
  std::vector<set_partition> out;
  for (std::size_t r = 2; r <= max_r; ++r)
    for_each_partition_k(r, 2, [&](const set_partition& p) { out.push_back(p); });
  return out;
}

// One enumeration pass of Pi_n accumulating per-k and overall totals for a
// batch of statistics.
struct totals {
  std::vector<exact_int> per_k;  // index 0..n
  exact_int all = 0;
};

inline std::vector<totals> brute_sums(std::size_t n, const std::vector<statistic>& stats) {
  std::vector<totals> out(stats.size());
  for (auto& t : out) t.per_k.assign(n + 1, exact_int(0));
  for_each_partition(n, [&](const set_partition& p) {
    std::size_t k = p.block_count();
    for (std::size_t s = 0; s < stats.size(); ++s) {
      std::uint64_t v = stats[s](p);
      if (v == 0) continue;
      out[s].per_k[k] += v;
      out[s].all += v;
    }
  });
  return out;
}

inline std::string rat_str(const exact_rat& r) { return to_fraction_string(r); }

}  // namespace verify_detail

inline std::vector<check_result> run_verification(const verify_options& opt) {
  namespace vd = verify_detail;
  std::vector<check_result> results;
  auto record = [&](const std::string& name, bool ok, std::string detail = "") {
    results.push_back({name, ok, std::move(detail)});
  };

  std::size_t max_n = opt.max_n;
  count_tables tables(std::max<std::size_t>(52, max_n + 2));

  // counting identities: enumerator totals match bell / stirling rows
  {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 0; n <= max_n && ok; ++n) {
      std::size_t count = 0;
      std::vector<std::size_t> per_k(n + 1, 0);
      for_each_partition(n, [&](const set_partition& p) {
        ++count;
        ++per_k[p.block_count()];
      });
      if (exact_int(count) != tables.bell(static_cast<std::int64_t>(n))) {
        ok = false;
        detail = "bell mismatch at n=" + std::to_string(n);
      }
      for (std::size_t k = 0; k <= n && ok; ++k) {
        if (exact_int(per_k[k]) !=
            tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) {
          ok = false;
          detail = "stirling mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        std::size_t direct = 0;
        for_each_partition_k(n, k, [&](const set_partition&) { ++direct; });
        if (direct != per_k[k]) {
          ok = false;
          detail = "k-enumerator mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    record("counting.bell-stirling", ok, detail);
  }

  // regular family counts
  {
    bool ok = true;
    std::string detail;
    for (std::size_t m = 1; m <= 4 && ok; ++m)
      for (std::size_t k = 0; m * k <= 8 && ok; ++k) {
        std::size_t count = 0;
        for_each_regular(m, k, [&](const set_partition&) { ++count; });
        if (exact_int(count) != regular_count(m, k)) {
          ok = false;
          detail = "m=" + std::to_string(m) + " k=" + std::to_string(k);
        }
      }
    record("counting.regular", ok, detail);
  }

  // summation formula and the Bell identity
  {
    bool ok = true;
    for (std::size_t n = 0; n <= 14 && ok; ++n)
      for (std::size_t k = 0; k <= n && ok; ++k)
        ok = stirling2_summation(n, k) ==
             tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
    record("tables.summation-formula", ok);
    ok = true;
    for (std::int64_t n = 0; n <= 30 && ok; ++n) {
      exact_int lhs = 0;
      for (std::int64_t k = 1; k <= n; ++k)
        lhs += exact_int(k) * (k - 1) * tables.stirling(n, k);
      ok = lhs == tables.bell(n + 2) - 3 * tables.bell(n + 1) + tables.bell(n);
    }
    record("tables.bell-identity", ok);
  }

  // q-Stirling distribution realized by los, plus its derivative at 1
  {
    bool ok = true;
    std::string detail;
    std::size_t qn = std::min<std::size_t>(max_n, 10);
    for (std::size_t n = 0; n <= qn && ok; ++n)
      for (std::size_t k = 0; k <= n && ok; ++k) {
        q_polynomial dist;
        for_each_partition_k(n, k,
                             [&](const set_partition& p) { dist.add_term(los(p), exact_int(1)); });
        if (!(dist == q_stirling_poly(n, k))) {
          ok = false;
          detail = "distribution mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        if (ok && n >= 1 && k >= 1) {
          exact_rat lhs(q_stirling_poly(n, k).derivative_at_one(),
                        tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
          if (lhs != mean_los_k(n, k, tables)) {
            ok = false;
            detail = "derivative mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k);
          }
        }
      }
    record("qstirling.distribution", ok, detail);
  }

  // Z-property suite
  {
    std::size_t zn = std::min<std::size_t>(max_n, 8);
    auto stats = vd::catalog();
    for (const auto& s : vd::occ_patterns(3)) stats.push_back(s);
    for (const auto& tau : vd::klazar_two_block_patterns(3))
      stats.push_back(statistic::make_klazar(tau));
    for (const auto& s : stats) {
      bool ok = true;
      std::string detail;
      for (std::size_t n = 0; n <= zn && ok; ++n) {
        if (auto witness = z_property_counterexample(s, n)) {
          ok = false;
          detail = "counterexample at n=" + std::to_string(n) + ": " + to_rgf_string(*witness);
        }
      }
      record("zproperty." + s.token(), ok, detail);
    }
    // blocks must fail: any single-block partition is a counterexample
    auto witness = z_property_counterexample(statistic::make(statistic::kind::blocks), 3);
    record("zproperty.blocks-counterexample", witness.has_value(),
           witness ? "first witness " + to_rgf_string(*witness) : "unexpectedly a Z-statistic");
  }

  // closed = engine = brute triangle
  {
    std::size_t tn = std::min<std::size_t>(max_n, 9);
    auto stats = vd::catalog();
    for (const auto& s : vd::occ_patterns(3)) stats.push_back(s);
    stats.push_back(statistic::make(statistic::kind::blocks));
    std::vector<v_sequence> vs;
    for (const auto& s : stats)
      vs.push_back(s.id() == statistic::kind::blocks ? v_sequence{}
                                                     : v2_enumerated(s, tn));
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= tn && ok; ++n) {
      auto brute = vd::brute_sums(n, stats);
      for (std::size_t si = 0; si < stats.size() && ok; ++si) {
        const auto& s = stats[si];
        bool is_blocks = s.id() == statistic::kind::blocks;
        exact_rat brute_mean(brute[si].all, tables.bell(static_cast<std::int64_t>(n)));
        if (!is_blocks) {
          auto engine = mean_n_engine(vs[si], n, tables);
          if (engine.mean != brute_mean) {
            ok = false;
            detail = s.token() + " engine!=brute at n=" + std::to_string(n);
          }
        }
        if (auto closed = closed_mean(s, n, tables); ok && closed && *closed != brute_mean) {
          ok = false;
          detail = s.token() + " closed!=brute at n=" + std::to_string(n);
        }
        for (std::size_t k = 1; k <= n && ok; ++k) {
          exact_rat bm(brute[si].per_k[k],
                       tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
          if (!is_blocks) {
            auto engine = mean_nk_engine(vs[si], n, k, tables);
            if (engine.mean != bm) {
              ok = false;
              detail = s.token() + " engine!=brute at n=" + std::to_string(n) +
                       " k=" + std::to_string(k);
            }
          }
          if (auto closed = closed_mean_k(s, n, k, tables); ok && closed && *closed != bm) {
            ok = false;
            detail = s.token() + " closed!=brute at n=" + std::to_string(n) +
                     " k=" + std::to_string(k);
          }
        }
      }
    }
    record("triangle.closed-engine-brute", ok, detail);
  }

  // closed v-sequences agree with enumerated ones entrywise
  {
    bool ok = true;
    std::string detail;
    std::vector<statistic> fams = vd::catalog();
    fams.push_back(statistic::parse("occ:12"));
    fams.push_back(statistic::parse("occ:21"));
    fams.push_back(statistic::parse("occ:122"));
    fams.push_back(statistic::parse("occ:211"));
    fams.push_back(statistic::parse("occ:1222"));
    fams.push_back(statistic::parse("occ:2111"));
    fams.push_back(statistic::parse("klazar:12"));
    fams.push_back(statistic::parse("klazar:122"));
    std::size_t vmax = 14;
    for (const auto& s : fams) {
      if (!has_v2_closed(s)) continue;
      auto enumerated = v2_enumerated(s, vmax);
      for (std::size_t m = 0; m <= vmax && ok; ++m)
        if (v2_closed(s, m) != enumerated.values[m]) {
          ok = false;
          detail = s.token() + " at m=" + std::to_string(m);
        }
      if (!ok) break;
    }
    record("vseq.closed-equals-enumerated", ok, detail);
  }

  // equidistribution of sums per (n, k)
  {
    bool ok = true;
    std::string detail;
    std::vector<statistic> pairs = {
        statistic::make(statistic::kind::crol), statistic::make(statistic::kind::nest2),
        statistic::make(statistic::kind::ov), statistic::make(statistic::kind::strong_emb)};
    for (std::size_t n = 1; n <= max_n && ok; ++n) {
      auto sums = vd::brute_sums(n, pairs);
      for (std::size_t k = 1; k <= n && ok; ++k) {
        if (sums[0].per_k[k] != sums[1].per_k[k]) {
          ok = false;
          detail = "crol vs nest2 at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        if (sums[2].per_k[k] != sums[3].per_k[k]) {
          ok = false;
          detail = "ov vs semb at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    record("equidistribution.sums", ok, detail);
  }

  // first-letter invariance of occ sums
  {
    bool ok = true;
    std::string detail;
    std::size_t fn = std::min<std::size_t>(max_n, 8);
    auto pats = vd::occ_patterns(4);
    for (std::size_t n = 1; n <= fn && ok; ++n) {
      auto sums = vd::brute_sums(n, pats);
      for (std::size_t a = 0; a < pats.size() && ok; ++a)
        for (std::size_t b = a + 1; b < pats.size() && ok; ++b) {
          if (pats[a].pattern().size() != pats[b].pattern().size() ||
              pats[a].pattern().front() != pats[b].pattern().front())
            continue;
          if (sums[a].per_k != sums[b].per_k) {
            ok = false;
            detail = pats[a].token() + " vs " + pats[b].token() + " at n=" + std::to_string(n);
          }
        }
    }
    record("occ.first-letter-invariance", ok, detail);
  }

  // connecting relations, exact, r <= 6
  {
    bool ok = true;
    std::string detail;
    for (std::size_t r = 2; r <= 6 && ok; ++r)
      for (std::size_t n = 1; n <= 40 && ok; ++n) {
        std::int64_t nn = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
        exact_rat lhs = mean_occ_first(n, r, 1, tables) + mean_occ_first(n, r, 2, tables);
        exact_rat rhs =
            exact_rat(binomial(nn, rr) * (tables.bell(nn + 2 - rr) - tables.bell(nn + 1 - rr)),
                      tables.bell(nn));
        if (lhs != rhs) {
          ok = false;
          detail = "bell-level at n=" + std::to_string(n) + " r=" + std::to_string(r);
        }
        for (std::size_t k = 1; k <= n && ok; ++k) {
          exact_rat lk =
              mean_occ_first_k(n, k, r, 1, tables) + mean_occ_first_k(n, k, r, 2, tables);
          std::int64_t kk = static_cast<std::int64_t>(k);
          exact_rat rk = exact_rat(
              binomial(nn, rr) * (tables.stirling(nn + 2 - rr, kk) - tables.stirling(nn + 1 - rr, kk)),
              tables.stirling(nn, kk));
          if (lk != rk) {
            ok = false;
            detail = "stirling-level at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " r=" + std::to_string(r);
          }
        }
      }
    record("occ.connecting-relations", ok, detail);
  }

  // the printed r = 2 and r = 3 displays
  {
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 40 && ok; ++n)
      for (int first : {1, 2}) {
        if (occ_display_r2(n, first, tables) != mean_occ_first(n, 2, first, tables) ||
            occ_display_r3(n, first, tables) != mean_occ_first(n, 3, first, tables)) {
          ok = false;
          detail = "n=" + std::to_string(n) + " first=" + std::to_string(first);
          break;
        }
      }
    record("occ.explicit-displays", ok, detail);
    bool ok2 = true;
    for (std::size_t n = 1; n <= 40 && ok2; ++n)
      ok2 = mean_inv(n, tables) == mean_occ_first(n, 2, 2, tables);
    record("occ.inv-identification", ok2);
  }

  // erratum witnesses: derivation variants pass, theorem statements fail
  {
    auto croc_stat = statistic::make(statistic::kind::croc);
    auto ov_stat = statistic::make(statistic::kind::ov);
    auto b4 = vd::brute_sums(4, {croc_stat, ov_stat});
    exact_rat brute_croc4(b4[0].all, tables.bell(4));
    exact_rat deriv = mean_croc(4, tables, formula_variant::derivation);
    exact_rat thm = mean_croc(4, tables, formula_variant::theorem);
    record("erratum.croc-bell",
           deriv == brute_croc4 && thm != brute_croc4 && thm == exact_rat(13, 15),
           "brute " + vd::rat_str(brute_croc4) + ", derivation " + vd::rat_str(deriv) +
               " (match), theorem " + vd::rat_str(thm) + " (mismatch, recorded)");

    auto b5 = vd::brute_sums(5, {croc_stat});
    exact_rat brute_croc53(b5[0].per_k[3], tables.stirling(5, 3));
    exact_rat deriv53 = mean_croc_k(5, 3, tables, formula_variant::derivation);
    exact_rat thm53 = mean_croc_k(5, 3, tables, formula_variant::theorem);
    record("erratum.croc-stirling",
           deriv53 == brute_croc53 && thm53 != brute_croc53 && thm53 == exact_rat(-3),
           "brute " + vd::rat_str(brute_croc53) + ", derivation " + vd::rat_str(deriv53) +
               " (match), theorem " + vd::rat_str(thm53) + " (mismatch, recorded)");

    exact_rat brute_ov42(b4[1].per_k[2], tables.stirling(4, 2));
    exact_rat deriv42 = mean_ov_k(4, 2, tables, formula_variant::derivation);
    exact_rat thm42 = mean_ov_k(4, 2, tables, formula_variant::theorem);
    record("erratum.ov-stirling",
           deriv42 == brute_ov42 && thm42 != brute_ov42 && thm42 == exact_rat(0),
           "brute " + vd::rat_str(brute_ov42) + ", derivation " + vd::rat_str(deriv42) +
               " (match), theorem " + vd::rat_str(thm42) + " (mismatch, recorded)");
  }

  // Klazar patterns: direct count, depth-2 engine, closed formula
  {
    bool ok = true;
    std::string detail;
    std::size_t kn = std::min<std::size_t>(max_n, 8);
    for (const auto& tau : vd::klazar_two_block_patterns(4)) {
      auto s = statistic::make_klazar(tau);
      auto v = v_enumerated(s, 2, kn);
      std::size_t r = tau.size();
      for (std::size_t n = 1; n <= kn && ok; ++n) {
        auto brute = vd::brute_sums(n, {s});
        auto engine = mean_n_engine(v, n, tables);
        exact_rat bm(brute[0].all, tables.bell(static_cast<std::int64_t>(n)));
        if (engine.mean != bm) {
          ok = false;
          detail = s.token() + " engine!=direct at n=" + std::to_string(n);
        }
        if (ok && r <= n && mean_klazar(n, r, tables) != bm) {
          ok = false;
          detail = s.token() + " closed!=direct at n=" + std::to_string(n);
        }
        for (std::size_t k = 1; k <= n && ok; ++k) {
          exact_rat bk(brute[0].per_k[k],
                       tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
          if (mean_nk_engine(v, n, k, tables).mean != bk) {
            ok = false;
            detail = s.token() + " engine!=direct at n=" + std::to_string(n) +
                     " k=" + std::to_string(k);
          }
        }
      }
      if (!ok) break;
    }
    record("klazar.three-paths", ok, detail);
  }

  // regular families against brute force
  {
    bool ok = true;
    std::string detail;
    for (std::size_t m = 1; m <= 5 && ok; ++m)
      for (std::size_t k = 1; m * k <= 10 && ok; ++k) {
        exact_int total = 0;
        std::size_t count = 0;
        for_each_regular(m, k, [&](const set_partition& p) {
          total += crol(p);
          ++count;
        });
        if (exact_rat(total, exact_int(count)) != regular_linear_mean(m, k)) {
          ok = false;
          detail = "linear m=" + std::to_string(m) + " k=" + std::to_string(k);
        }
      }
    record("regular.linear", ok, detail);
    ok = true;
    for (std::size_t k : {2, 3}) {
      exact_int total = 0;
      std::size_t count = 0;
      for_each_regular(3, k, [&](const set_partition& p) {
        total += croc(p);
        ++count;
      });
      if (exact_rat(total, exact_int(count)) != regular_circular_mean(3, k)) {
        ok = false;
        detail = "circular m=3 k=" + std::to_string(k);
      }
    }
    record("regular.circular", ok, detail);
  }

  // sampler: exact branch probabilities sum to 1 without sampling
  {
    bool ok = true;
    for (std::size_t m = 1; m <= 40 && ok; ++m) {
      exact_int sum = 0;
      for (std::size_t j = 1; j <= m; ++j)
        sum += binomial(static_cast<std::int64_t>(m - 1), static_cast<std::int64_t>(j - 1)) *
               tables.bell(static_cast<std::int64_t>(m - j));
      ok = sum == tables.bell(static_cast<std::int64_t>(m));
    }
    record("sampler.branch-probabilities", ok);
  }

  // sampler: chi-square uniformity over Pi_4
  {
    std::map<std::vector<letter>, std::size_t> index;
    for_each_partition(4, [&](const set_partition& p) {
      std::size_t i = index.size();
      index[p.word()] = i;
    });
    std::vector<std::size_t> obs(index.size(), 0);
    partition_sampler sampler(4, opt.seed, tables);
    for (std::size_t t = 0; t < opt.sampler_trials; ++t) ++obs[index.at(sampler.next().word())];
    double expected = static_cast<double>(opt.sampler_trials) / static_cast<double>(index.size());
    double chi2 = 0.0;
    for (std::size_t c : obs) {
      double d = static_cast<double>(c) - expected;
      chi2 += d * d / expected;
    }
    // chi-square(14) upper quantile at significance 1e-3
    std::ostringstream os;
    os << "chi2=" << chi2 << " threshold=36.1233 over " << opt.sampler_trials << " trials";
    record("sampler.chi-square-uniformity", chi2 < 36.1233, os.str());
  }

  // sampler: empirical means within 5 stderr of exact values
  {
    auto run = [&](const statistic& s, sampler_config cfg, const exact_rat& exact,
                   const std::string& label) {
      auto est = empirical_mean(s, cfg, tables);
      double gap = std::abs(est.mean - exact_to_double(exact));
      std::ostringstream os;
      os << label << ": empirical " << est.mean << " exact " << exact_to_double(exact)
         << " stderr " << est.stderr_of_mean;
      record("sampler.empirical." + label, gap <= 5.0 * est.stderr_of_mean, os.str());
    };
    run(statistic::make(statistic::kind::crol),
        {30, std::nullopt, opt.seed + 1, opt.sampler_trials}, mean_crol(30, tables), "crol-30");
    run(statistic::make(statistic::kind::blocks),
        {50, std::nullopt, opt.seed + 2, opt.sampler_trials}, mean_blocks(50, tables),
        "blocks-50");
    run(statistic::make(statistic::kind::ov), {40, 5, opt.seed + 3, opt.sampler_trials},
        mean_ov_k(40, 5, tables), "ov-40-5");
  }

  // sampler: rank/unrank bijectivity and agreement with the enumerators
  {
    bool ok = true;
    std::string detail;
    std::size_t un = std::min<std::size_t>(max_n, 8);
    for (std::size_t n = 1; n <= un && ok; ++n) {
      for (std::size_t k = 1; k <= n && ok; ++k) {
        k_rank_tables tk(n, k);
        exact_int total = tk.total();
        exact_int expect = 0;
        partition_k_stream stream(n, k);
        for (exact_int r = 0; r < total; ++r) {
          auto p = unrank_partition_k(tk, r);
          auto q = stream.next();
          if (!q || !(p == *q) || rank_partition_k(tk, p) != r) {
            ok = false;
            detail = "k-unrank at n=" + std::to_string(n) + " k=" + std::to_string(k);
            break;
          }
          ++expect;
        }
        if (ok && (stream.next().has_value() ||
                   expect != tables.stirling(static_cast<std::int64_t>(n),
                                             static_cast<std::int64_t>(k)))) {
          ok = false;
          detail = "k-unrank count at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
      if (!ok) break;
      const exact_int& bn = tables.bell(static_cast<std::int64_t>(n));
      for (exact_int r = 0; r < bn; ++r) {
        auto p = unrank_partition(n, r, tables);
        if (rank_partition(p, tables) != r) {
          ok = false;
          detail = "all-unrank at n=" + std::to_string(n);
          break;
        }
      }
    }
    record("sampler.rank-unrank", ok, detail);
  }

  return results;
}

}  // namespace partstat
