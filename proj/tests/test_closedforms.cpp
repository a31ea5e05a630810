#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "partstat/closedforms.hpp"
#include "partstat/zmean.hpp"

using namespace partstat;

namespace {
count_tables& tables() {
  static count_tables t(64);
  return t;
}
}  // namespace

TEST_CASE("los means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_los(1, t) == 0);
  CHECK(mean_los(3, t) == exact_rat(7, 5));
  CHECK(mean_los_k(3, 2, t) == exact_rat(4, 3));
  CHECK_THROWS_AS(mean_los(0, t), partstat::out_of_range);
  CHECK_THROWS_AS(mean_los_k(3, 0, t), partstat::out_of_range);
  CHECK_THROWS_AS(mean_los_k(3, 4, t), partstat::out_of_range);
}

TEST_CASE("tilde distribution means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_los_tilde_k(3, 2, t) == exact_rat(1, 3));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(mean_los_tilde_k(n, 1, t) == 0);
  // oracle: the direct definition sum_k (mu_{n,k} - C(k,2)) S_{n,k} / B_n
  for (std::size_t n = 1; n <= 9; ++n) {
    exact_rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      exact_rat mu(oracles::sum_over_k(n, k, los),
                   tables().stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
      acc += (mu - exact_rat(binomial(static_cast<std::int64_t>(k), 2))) *
             exact_rat(t.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    }
    acc /= exact_rat(t.bell(static_cast<std::int64_t>(n)));
    CHECK(mean_los_tilde(n, t) == acc);
  }
  CHECK(mean_los_tilde(3, t) == exact_rat(1, 5));
}

TEST_CASE("crol means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_crol(4, t) == exact_rat(1, 15));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(mean_crol(n, t) == 0);
  CHECK(mean_crol_k(4, 2, t) == exact_rat(1, 7));
}

TEST_CASE("croc means and the erratum variants", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_croc(1, t) == 0);
  CHECK(mean_croc(4, t) == exact_rat(1, 15));
  CHECK(mean_croc(4, t, formula_variant::derivation) == exact_rat(1, 15));
  CHECK(mean_croc(4, t, formula_variant::theorem) == exact_rat(13, 15));
  CHECK(mean_croc_k(5, 3, t) == exact_rat(1, 5));
  CHECK(mean_croc_k(5, 3, t, formula_variant::theorem) == exact_rat(-3));
  CHECK(oracles::brute_mean_k(5, 3, croc) == exact_rat(1, 5));
  CHECK(oracles::brute_mean(4, croc) == exact_rat(1, 15));
}

TEST_CASE("ov means and the erratum variant", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_ov(4, t) == exact_rat(1, 15));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(mean_ov(n, t) == 0);
  CHECK(mean_ov_k(4, 2, t) == exact_rat(1, 7));
  CHECK(mean_ov_k(4, 2, t, formula_variant::theorem) == 0);
  CHECK(oracles::brute_mean_k(4, 2, ov) == exact_rat(1, 7));
}

TEST_CASE("emb means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_emb(4, t) == exact_rat(7, 15));
  CHECK(oracles::sum_over_all(4, emb) == 7);
  CHECK(mean_emb(3, t) == exact_rat(1, 5));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(mean_emb_k(n, 1, t) == 0);
}

TEST_CASE("occ means by first letter", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_occ_first(3, 2, 1, t) == exact_rat(8, 5));
  CHECK(mean_occ_first(3, 2, 2, t) == exact_rat(1, 5));
  CHECK(mean_occ_first(3, 2, 1, t) + mean_occ_first(3, 2, 2, t) == exact_rat(9, 5));
  // connecting relation at n=3, r=2: C(3,2)(B_3 - B_2)/B_3
  CHECK(exact_rat(binomial(3, 2) * (t.bell(3) - t.bell(2)), t.bell(3)) == exact_rat(9, 5));
  CHECK_THROWS_AS(mean_occ_first(3, 1, 1, t), partstat::out_of_range);
  CHECK_THROWS_AS(mean_occ_first(3, 2, 3, t), partstat::out_of_range);
}

TEST_CASE("inv means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_inv(3, t) == exact_rat(1, 5));
  CHECK(mean_inv(1, t) == 0);
  CHECK(mean_inv_k(3, 2, t) == exact_rat(1, 3));
  for (std::size_t n = 1; n <= 60; ++n) CHECK(mean_inv(n, t) == mean_occ_first(n, 2, 2, t));
}

TEST_CASE("klazar means", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_klazar(4, 2, t) == exact_rat(4));
  CHECK(mean_klazar(4, 3, t) == exact_rat(4, 5));
  for (std::size_t n = 2; n <= 9; ++n)
    CHECK(mean_klazar(n, n, t) == exact_rat(1, t.bell(static_cast<std::int64_t>(n))));
  CHECK_THROWS_AS(mean_klazar(3, 1, t), partstat::out_of_range);
  CHECK_THROWS_AS(mean_klazar(3, 4, t), partstat::out_of_range);
}

TEST_CASE("block-count mean", "[closedforms]") {
  auto& t = tables();
  CHECK(mean_blocks(1, t) == 1);
  CHECK(mean_blocks(3, t) == 2);
  CHECK(mean_blocks(4, t) == exact_rat(37, 15));
  CHECK(oracles::sum_over_all(4, blocks_stat) == 37);
}

TEST_CASE("regular family means", "[closedforms]") {
  CHECK(regular_linear_mean(2, 2) == exact_rat(1, 3));
  for (std::size_t m = 1; m <= 6; ++m) CHECK(regular_linear_mean(m, 1) == 0);
  CHECK(regular_circular_mean(3, 2) == 3);
  CHECK_THROWS_AS(regular_circular_mean(2, 2), partstat::out_of_range);
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t k = 1; m * k <= 8; ++k) {
      exact_int total = 0;
      std::size_t count = 0;
      for_each_regular(m, k, [&](const set_partition& p) {
        total += crol(p);
        ++count;
      });
      CHECK(regular_linear_mean(m, k) == exact_rat(total, exact_int(count)));
    }
}

TEST_CASE("closed means agree with brute force everywhere", "[closedforms]") {
  auto& t = tables();
  for (const char* tok : {"los", "inv", "crol", "croc", "nest2", "ov", "emb", "semb", "blocks",
                          "occ:12", "occ:21", "occ:112", "occ:212", "klazar:12", "klazar:112"}) {
    auto s = statistic::parse(tok);
    INFO(tok);
    for (std::size_t n = 1; n <= 7; ++n) {
      if (auto closed = closed_mean(s, n, t)) CHECK(*closed == oracles::brute_mean(n, s));
      for (std::size_t k = 1; k <= n; ++k)
        if (auto closed = closed_mean_k(s, n, k, t))
          CHECK(*closed == oracles::brute_mean_k(n, k, s));
    }
  }
}

TEST_CASE("closed means agree with the engine far beyond enumeration", "[closedforms]") {
  auto& t = tables();
  for (const char* tok : {"los", "inv", "crol", "croc", "ov", "emb", "occ:12", "occ:21"}) {
    auto s = statistic::parse(tok);
    auto v = v2_closed_sequence(s, 60);
    INFO(tok);
    for (std::size_t n = 1; n <= 60; ++n) {
      std::size_t bad = 0;
      if (*closed_mean(s, n, t) != mean_n_engine(v, n, t).mean) ++bad;
      for (std::size_t k = 1; k <= n; ++k)
        if (*closed_mean_k(s, n, k, t) != mean_nk_engine(v, n, k, t).mean) ++bad;
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("explicit r=2 and r=3 displays match the general formula", "[closedforms]") {
  auto& t = tables();
  for (std::size_t n = 1; n <= 40; ++n)
    for (int first : {1, 2}) {
      CHECK(occ_display_r2(n, first, t) == mean_occ_first(n, 2, first, t));
      CHECK(occ_display_r3(n, first, t) == mean_occ_first(n, 3, first, t));
    }
}

TEST_CASE("connecting relations hold exactly", "[closedforms]") {
  auto& t = tables();
  for (std::size_t r = 2; r <= 6; ++r)
    for (std::size_t n = 1; n <= 30; ++n) {
      std::int64_t nn = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
      CHECK(mean_occ_first(n, r, 1, t) + mean_occ_first(n, r, 2, t) ==
            exact_rat(binomial(nn, rr) * (t.bell(nn + 2 - rr) - t.bell(nn + 1 - rr)),
                      t.bell(nn)));
      for (std::size_t k = 1; k <= n; ++k) {
        std::int64_t kk = static_cast<std::int64_t>(k);
        CHECK(mean_occ_first_k(n, k, r, 1, t) + mean_occ_first_k(n, k, r, 2, t) ==
              exact_rat(binomial(nn, rr) *
                            (t.stirling(nn + 2 - rr, kk) - t.stirling(nn + 1 - rr, kk)),
                        t.stirling(nn, kk)));
      }
    }
}

TEST_CASE("formula catalog marks the canonical variants", "[closedforms]") {
  auto catalog = formula_catalog();
  CHECK(catalog.size() >= 20);
  int theorem_entries = 0;
  for (const auto& f : catalog) {
    if (f.variant == formula_variant::theorem) {
      ++theorem_entries;
      CHECK_FALSE(f.canonical);
    }
    if (f.variant == formula_variant::derivation) CHECK(f.canonical);
  }
  CHECK(theorem_entries == 3);
}
