#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partstat/enumerate.hpp"
#include "partstat/exact.hpp"
#include "partstat/statistics.hpp"

namespace partstat {

// values[m] = sum of the statistic over the depth-block partitions of [m];
// the only input the mean engine needs.
struct v_sequence {
  std::size_t depth = 2;
  std::vector<exact_int> values;
  std::string source = "enumerated";
};

inline v_sequence v_enumerated(const statistic& s, std::size_t depth, std::size_t max_m) {
  v_sequence v;
  v.depth = depth;
  v.values.resize(max_m + 1, exact_int(0));
  for (std::size_t m = depth; m <= max_m; ++m) {
    exact_int acc = 0;
    for_each_partition_k(m, depth, [&](const set_partition& p) { acc += s(p); });
    v.values[m] = std::move(acc);
  }
  return v;
}

inline v_sequence v2_enumerated(const statistic& s, std::size_t max_m) {
  return v_enumerated(s, 2, max_m);
}

inline bool has_v2_closed(const statistic& s) {
  using k = statistic::kind;
  switch (s.id()) {
    case k::los:
    case k::inv:
    case k::crol:
    case k::croc:
    case k::ov:
    case k::emb:
    case k::nest2:       // equidistributed with crol on every Pi_n^k
    case k::strong_emb:  // equidistributed with ov
    case k::occ:
      return true;
    case k::klazar:
      return s.depth() == 2;
    case k::blocks:
      return false;  // not a Z-statistic; no engine input
  }
  return false;
}

// The per-family closed forms for v_m = sum over Pi_m^2.
inline exact_int v2_closed(const statistic& s, std::size_t n) {
  using k = statistic::kind;
  switch (s.id()) {
    case k::los:
      return n >= 2 ? exact_int(n - 1) * power_of_two(n - 2) : exact_int(0);
    case k::inv:
      return n >= 3 ? binomial(static_cast<std::int64_t>(n) - 1, 2) * power_of_two(n - 3)
                    : exact_int(0);
    case k::crol:
    case k::nest2:
      if (n <= 3) return 0;
      return (exact_int(n) - 5) * power_of_two(n - 2) + n + 1;
    case k::croc:
      if (n <= 3) return 0;
      if (n == 4) return 1;
      return exact_int(n) * power_of_two(n - 2) + 4 * exact_int(n) - 2 * exact_int(n) * n;
    case k::ov:
    case k::strong_emb:
      return n >= 2 ? power_of_two(n - 2) - n + 1 : exact_int(0);
    case k::emb:
      return n >= 2 ? power_of_two(n - 2) - 1 : exact_int(0);
    case k::occ: {
      std::size_t r = s.pattern().size();
      std::int64_t nn = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
      if (s.pattern().front() == 2) {
        if (n <= r) return 0;  // the binomial vanishes at n == r
        return binomial(nn - 1, rr) * power_of_two(n - r - 1);
      }
      if (n < r) return 0;
      exact_int t = binomial(nn - 1, rr - 1) * power_of_two(n - r);
      if (n > r) t += binomial(nn - 1, rr) * power_of_two(n - r - 1);
      return t;
    }
    case k::klazar: {
      // for a 2-block pattern of [r]: every r-subset extends to 2^{m-r}
      // two-block partitions inducing it
      if (s.depth() != 2) throw unknown_statistic("no closed v-sequence: " + s.token());
      std::size_t r = s.pattern().size();
      if (n < r) return 0;
      return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)) *
             power_of_two(n - r);
    }
    default:
      throw unknown_statistic("no closed v-sequence: " + s.token());
  }
}

inline v_sequence v2_closed_sequence(const statistic& s, std::size_t max_m) {
  v_sequence v;
  v.depth = 2;
  v.source = "closed:" + s.token();
  v.values.resize(max_m + 1);
  for (std::size_t m = 0; m <= max_m; ++m) v.values[m] = v2_closed(s, m);
  return v;
}

// sum_{pi in Pi_n^k} stat(pi) = sum_m C(n,m) S_{n-m,k-depth} v_m.
// Bypasses enumeration of Pi_n entirely.
inline exact_int total_nk(const v_sequence& v, std::size_t n, std::int64_t k,
                          const count_tables& tables) {
  if (v.values.size() <= n)
    throw insufficient_sequence("v-sequence covers only m <= " +
                                std::to_string(v.values.size()) + ", need " + std::to_string(n));
  std::int64_t off = k - static_cast<std::int64_t>(v.depth);
  exact_int total = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    if (v.values[m] == 0) continue;
    const exact_int& s = tables.stirling(static_cast<std::int64_t>(n - m), off);
    if (s == 0) continue;
    total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) * s *
             v.values[m];
  }
  return total;
}

enum class oracle_verdict { match, mismatch };

struct mean_report {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  exact_int total;
  exact_rat mean;
  double mean_float = 0.0;
  std::optional<double> asymptotic;
  std::optional<oracle_verdict> oracle;
  std::string oracle_detail;
};

inline mean_report mean_nk_engine(const v_sequence& v, std::size_t n, std::size_t k,
                                  const count_tables& tables) {
  mean_report r;
  r.n = n;
  r.k = k;
  r.total = total_nk(v, n, static_cast<std::int64_t>(k), tables);
  const exact_int& s = tables.stirling(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (s == 0) throw out_of_range("mean_nk_engine: S_{n,k} = 0 for n=" + std::to_string(n) +
                                 " k=" + std::to_string(k));
  r.mean = exact_rat(r.total, s);
  r.mean_float = exact_to_double(r.mean);
  return r;
}

inline mean_report mean_n_engine(const v_sequence& v, std::size_t n, const count_tables& tables) {
  if (v.values.size() <= n)
    throw insufficient_sequence("v-sequence covers only m <= " +
                                std::to_string(v.values.size()) + ", need " + std::to_string(n));
  mean_report r;
  r.n = n;
  exact_int total = 0;
  for (std::size_t m = 0; m <= n; ++m) {
    if (v.values[m] == 0) continue;
    total += binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(m)) *
             tables.bell(static_cast<std::int64_t>(n - m)) * v.values[m];
  }
  r.total = std::move(total);
  const exact_int& b = tables.bell(static_cast<std::int64_t>(n));
  if (b == 0) throw division_by_zero_count("bell(n) = 0");  // unreachable, guarded anyway
  r.mean = exact_rat(r.total, b);
  r.mean_float = exact_to_double(r.mean);
  return r;
}

}  // namespace partstat
