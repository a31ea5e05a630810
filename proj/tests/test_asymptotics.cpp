#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <string>

#include "partstat/asymptotics.hpp"

using namespace partstat;

namespace {
count_tables& big_tables() {
  static count_tables t(402);
  return t;
}

std::string format_double_probe(const exact_rat& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", exact_to_double(r));
  return buf;
}
}  // namespace

TEST_CASE("bell quotient leading term", "[asymptotics]") {
  CHECK(bell_quotient_leading(100, 0) == 1.0);
  double n = 100, ln = std::log(100.0);
  CHECK(bell_quotient_leading(100, 1) ==
        Catch::Approx((n / ln) * (1.0 + std::log(ln) / ln)).epsilon(1e-14));
  CHECK(bell_quotient_leading(100, 1, false) == Catch::Approx(n / ln).epsilon(1e-14));
  CHECK_THROWS_AS(bell_quotient_leading(2, 1), partstat::out_of_range);
  // the bare-term diagnostic improves between the grid endpoints
  auto& t = big_tables();
  auto diag = [&](std::size_t m, bool corr) {
    double exact = exact_to_double(exact_rat(t.bell(static_cast<std::int64_t>(m) + 1),
                                             t.bell(static_cast<std::int64_t>(m))));
    return std::abs(exact / bell_quotient_leading(m, 1, corr) - 1.0);
  };
  CHECK(diag(400, false) < diag(100, false));
  // with the printed two-term correction the r=2 quotient improves as well
  auto diag2 = [&](std::size_t m) {
    double exact = exact_to_double(exact_rat(t.bell(static_cast<std::int64_t>(m) + 2),
                                             t.bell(static_cast<std::int64_t>(m))));
    return std::abs(exact / bell_quotient_leading(m, 2, true) - 1.0);
  };
  CHECK(diag2(400) < diag2(100));
}

TEST_CASE("stirling quotient leading term", "[asymptotics]") {
  CHECK(stirling_quotient_leading(50, 3, 0, 0) == 1.0);
  CHECK(stirling_quotient_leading(50, 3, 2, 0) == Catch::Approx(1.0 / 9.0));
  CHECK(stirling_quotient_leading(50, 3, 0, 1) == 0.0);
  auto& t = big_tables();
  double ratio = exact_to_double(exact_rat(t.stirling(50, 2), t.stirling(50, 3)));
  CHECK(ratio < 1e-6);
}

TEST_CASE("asymptotic mean families evaluate as printed", "[asymptotics]") {
  double n = 100, ln = std::log(100.0), c = std::log(ln) / ln;
  CHECK(asymptotic_mean(statistic::parse("los"), 100) ==
        Catch::Approx(n * n / (2 * ln) * (1 + c)).epsilon(1e-14));
  CHECK(asymptotic_mean(statistic::parse("ov"), 100) ==
        Catch::Approx(0.25 * (n / ln) * (n / ln) * (1 + 2 * c)).epsilon(1e-14));
  CHECK(asymptotic_mean(statistic::parse("occ:122"), 100) ==
        Catch::Approx(n * n * ln / 12.0 * (1 - c)).epsilon(1e-14));
  CHECK(asymptotic_mean(statistic::parse("occ:12"), 100) == Catch::Approx(n * n / 4.0));
  CHECK(occ_length2_asymptotic(100) ==
        Catch::Approx(n * n / 4.0 * (1 - 1 / ln - std::log(ln) / (ln * ln))).epsilon(1e-14));
  CHECK_THROWS_AS(asymptotic_mean(statistic::parse("los"), 2), partstat::out_of_range);
}

TEST_CASE("block-level leading polynomial at n=50,k=3 for los", "[asymptotics]") {
  auto& t = big_tables();
  CHECK(asymptotic_mean_k(statistic::parse("los"), 50, 3) == Catch::Approx(48.5));
  double exact = exact_to_double(mean_los_k(50, 3, t));
  CHECK(std::abs(exact - 48.5) < 1e-6);
}

TEST_CASE("block-level gap vanishes exponentially", "[asymptotics]") {
  auto& t = big_tables();
  for (const char* tok : {"los", "crol", "ov", "emb"}) {
    auto s = statistic::parse(tok);
    double exact = exact_to_double(*closed_mean_k(s, 60, 3, t));
    CHECK(std::abs(exact - asymptotic_mean_k(s, 60, 3)) < 1e-3);
  }
  // inv and blocks leading parts are exact in the same sense
  CHECK(std::abs(exact_to_double(*closed_mean_k(statistic::parse("inv"), 60, 3, t)) -
                 asymptotic_mean_k(statistic::parse("inv"), 60, 3)) < 1e-3);
  CHECK(asymptotic_mean_k(statistic::parse("blocks"), 60, 3) == 3.0);
}

TEST_CASE("occ length-2 sharper display brackets the exact mean", "[asymptotics]") {
  auto& t = big_tables();
  // sigma_1 = 2 (and inv, whose display this is) sits inside (0.8, 1.3) at n=300
  double exact21 = exact_to_double(mean_occ_first(300, 2, 2, t));
  double ratio21 = exact21 / occ_length2_asymptotic(300);
  CHECK(ratio21 > 0.8);
  CHECK(ratio21 < 1.3);
  double exact_inv = exact_to_double(mean_inv(300, t));
  double ratio_inv = exact_inv / asymptotic_mean(statistic::parse("inv"), 300);
  CHECK(ratio_inv > 0.8);
  CHECK(ratio_inv < 1.3);
}

TEST_CASE("convergence reports", "[asymptotics]") {
  auto& t = big_tables();
  std::vector<std::size_t> grid{50, 100, 200, 400};
  auto los_rep = convergence_report(statistic::parse("los"), grid, t);
  REQUIRE(los_rep.size() == 4);
  // two-term ratio tightens between the endpoints
  CHECK(std::abs(los_rep.back().correction_ratio - 1.0) <
        std::abs(los_rep.front().correction_ratio - 1.0));
  auto ov_rep = convergence_report(statistic::parse("ov"), grid, t);
  CHECK(std::abs(ov_rep.back().correction_ratio - 1.0) <
        std::abs(ov_rep.front().correction_ratio - 1.0));
  for (const auto& r : ov_rep) {
    CHECK(r.leading > 0.0);
    CHECK(std::isfinite(r.ratio));
    CHECK(r.ratio > 0.0);
  }
  // block-level croc gap decreases along 20, 40, 80 at k = 4
  auto croc_rep = convergence_report_k(statistic::parse("croc"), 4, {20, 40, 80}, t);
  double g0 = std::abs(exact_to_double(croc_rep[0].exact) - croc_rep[0].leading);
  double g1 = std::abs(exact_to_double(croc_rep[1].exact) - croc_rep[1].leading);
  double g2 = std::abs(exact_to_double(croc_rep[2].exact) - croc_rep[2].leading);
  CHECK(g1 < g0);
  CHECK(g2 < g1);
}

TEST_CASE("ratios stay finite and positive across the range", "[asymptotics]") {
  auto& t = big_tables();
  for (const char* tok : {"los", "crol", "croc", "ov", "emb", "occ:12", "occ:21", "inv"}) {
    auto s = statistic::parse(tok);
    std::size_t bad = 0;
    for (std::size_t n = 10; n <= 400; ++n) {
      double ratio = exact_to_double(*closed_mean(s, n, t)) / asymptotic_mean(s, n);
      if (!std::isfinite(ratio) || ratio <= 0.0) ++bad;
    }
    INFO(tok);
    CHECK(bad == 0);
  }
}

TEST_CASE("rational-to-double conversion is correctly rounded", "[asymptotics]") {
  // frozen against an independent correctly-rounded conversion
  auto& t = big_tables();
  CHECK(format_double_probe(exact_rat(1, 3)) == "0.33333333333333331");
  CHECK(format_double_probe(exact_rat(2, 3)) == "0.66666666666666663");
  CHECK(format_double_probe(exact_rat(1, 10)) == "0.10000000000000001");
  CHECK(format_double_probe(exact_rat(t.bell(401), t.bell(400))) == "89.167821125913363");
  CHECK(format_double_probe(exact_rat(t.bell(402), t.bell(400))) == "7967.1381460827643");
  CHECK(format_double_probe(exact_rat(t.stirling(60, 2), t.stirling(60, 3))) ==
        "8.1591649174750152e-11");
}
