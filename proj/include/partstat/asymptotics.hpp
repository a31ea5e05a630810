#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "partstat/closedforms.hpp"
#include "partstat/exact.hpp"
#include "partstat/statistics.hpp"

namespace partstat {

// Natural logarithm throughout.

/// (n / ln n)^r * (1 + r ln ln n / ln n); the two-term Bell-quotient approximation.
inline double bell_quotient_leading(std::size_t n, std::int64_t r, bool with_correction = true) {
  if (n < 3) throw out_of_range("bell_quotient_leading requires n >= 3");
  double ln = std::log(static_cast<double>(n));
  double base = std::pow(static_cast<double>(n) / ln, static_cast<double>(r));
  if (!with_correction) return base;
  return base * (1.0 + static_cast<double>(r) * std::log(ln) / ln);
}

/// Leading term of S_{n-i,k-j} / S_{n,k}: 1/k^i when j = 0, otherwise 0.
inline double stirling_quotient_leading(std::size_t /*n*/, std::size_t k, std::size_t i,
                                        std::size_t j) {
  if (k < 1) throw out_of_range("stirling_quotient_leading requires k >= 1");
  if (j > 0) return 0.0;
  return std::pow(static_cast<double>(k), -static_cast<double>(i));
}

namespace detail {

inline double ln_of(std::size_t n) { return std::log(static_cast<double>(n)); }
inline double lnln_of(std::size_t n) { return std::log(std::log(static_cast<double>(n))); }

inline double factorial_d(std::size_t r) {
  double f = 1.0;
  for (std::size_t i = 2; i <= r; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace detail

/// The sharper length-2 pattern display: n^2/4 (1 - 1/ln n - lnln n/(ln n)^2).
inline double occ_length2_asymptotic(std::size_t n, bool with_correction = true) {
  if (n < 3) throw out_of_range("occ_length2_asymptotic requires n >= 3");
  double nn = static_cast<double>(n), ln = detail::ln_of(n);
  double base = nn * nn / 4.0;
  if (!with_correction) return base;
  return base * (1.0 - 1.0 / ln - detail::lnln_of(n) / (ln * ln));
}

// Leading asymptotic value of the mean over Pi_n. Includes the first
// correction factor by default; pass false for the bare first-order term.
inline double asymptotic_mean(const statistic& s, std::size_t n, bool with_correction = true) {
  if (n < 3) throw out_of_range("asymptotic_mean requires n >= 3");
  double nn = static_cast<double>(n), ln = detail::ln_of(n), c = detail::lnln_of(n) / ln;
  using k = statistic::kind;
  switch (s.id()) {
    case k::los:
    case k::crol:
    case k::croc:
    case k::nest2: {
      double base = nn * nn / (2.0 * ln);
      return with_correction ? base * (1.0 + c) : base;
    }
    case k::ov:
    case k::emb:
    case k::strong_emb: {
      double base = 0.25 * (nn / ln) * (nn / ln);
      return with_correction ? base * (1.0 + 2.0 * c) : base;
    }
    case k::inv:
      return occ_length2_asymptotic(n, with_correction);
    case k::occ: {
      std::size_t r = s.pattern().size();
      double base = nn * nn * std::pow(ln, static_cast<double>(r) - 2.0) /
                    (2.0 * detail::factorial_d(r));
      return with_correction ? base * (1.0 - (static_cast<double>(r) - 2.0) * c) : base;
    }
    case k::klazar: {
      // sum of the two occ classes of the same length
      std::size_t r = s.pattern().size();
      double base =
          nn * nn * std::pow(ln, static_cast<double>(r) - 2.0) / detail::factorial_d(r);
      return with_correction ? base * (1.0 - (static_cast<double>(r) - 2.0) * c) : base;
    }
    case k::blocks:
      return bell_quotient_leading(n, 1, with_correction) - 1.0;
  }
  throw unknown_statistic("no asymptotic family for " + s.token());
}

// Leading polynomial part of the block-level mean for fixed k (the remainder
// decays like (1 - 1/k)^n by the Stirling-quotient lemma).
inline double asymptotic_mean_k(const statistic& s, std::size_t n, std::size_t k,
                                bool /*with_correction*/ = true) {
  if (k < 1) throw out_of_range("asymptotic_mean_k requires k >= 1");
  double nn = static_cast<double>(n), kk = static_cast<double>(k);
  double c2 = kk * (kk - 1.0) / 2.0;
  using kd = statistic::kind;
  switch (s.id()) {
    case kd::los: return 0.5 * nn * (kk - 1.0) - 0.5 * c2;
    case kd::crol:
    case kd::nest2: return 0.5 * nn * (kk - 1.0) - 2.5 * c2;
    case kd::croc: return 0.5 * nn * (kk - 1.0);
    case kd::ov:
    case kd::strong_emb: return 0.5 * c2;
    case kd::emb: return 0.5 * c2;
    case kd::inv:
      return 0.25 * nn * (nn - kk - 1.0) * (1.0 - 1.0 / kk) + kk * (kk - 1.0) / 8.0;
    case kd::blocks: return kk;
    case kd::occ: {
      std::size_t r = s.pattern().size();
      std::int64_t nn_i = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
      double acc = 0.0;
      double sum_p = 0.0;
      for (std::size_t j = 0; j <= r; ++j)
        sum_p += exact_to_double(detail::occ_p_coeff(n, r, j)) *
                 std::pow(kk, 2.0 - static_cast<double>(j));
      double half_cr = 0.5 * exact_to_double(binomial(nn_i, rr));
      if (s.pattern().front() == 2) {
        acc = sum_p - half_cr * std::pow(kk, 1.0 - static_cast<double>(r));
      } else {
        acc = -sum_p + 2.0 * half_cr * std::pow(kk, 2.0 - static_cast<double>(r)) -
              half_cr * std::pow(kk, 1.0 - static_cast<double>(r));
      }
      return acc;
    }
    case kd::klazar: {
      std::size_t r = s.pattern().size();
      double cr = exact_to_double(
          binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(r)));
      return cr * (std::pow(kk, 2.0 - static_cast<double>(r)) -
                   std::pow(kk, 1.0 - static_cast<double>(r)));
    }
  }
  throw unknown_statistic("no block-level asymptotic for " + s.token());
}

// One row per grid point. Field semantics follow the report contract:
// leading is the bare first term, ratio = exact/leading, correction_ratio =
// exact / (leading * (1 + first printed correction)).
struct asymptotic_report {
  std::size_t n = 0;
  exact_rat exact;
  double leading = 0.0;
  double ratio = 0.0;
  double correction_ratio = 0.0;
};

inline std::vector<asymptotic_report> convergence_report(const statistic& s,
                                                         const std::vector<std::size_t>& grid,
                                                         const count_tables& tables) {
  std::vector<asymptotic_report> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::size_t n = grid[i];
    if (n < 3) throw out_of_range("convergence_report grid entries must be >= 3");
    if (i > 0 && grid[i - 1] >= n) throw out_of_range("convergence_report grid must ascend");
    asymptotic_report r;
    r.n = n;
    auto exact = closed_mean(s, n, tables);
    if (!exact) throw unknown_statistic("no closed mean for " + s.token());
    r.exact = *exact;
    r.leading = asymptotic_mean(s, n, false);
    double two_term = asymptotic_mean(s, n, true);
    double e = exact_to_double(r.exact);
    r.ratio = e / r.leading;
    r.correction_ratio = e / two_term;
    out.push_back(std::move(r));
  }
  return out;
}

/// Block-level analog: exact mu_{n,k} against the leading polynomial part.
inline std::vector<asymptotic_report> convergence_report_k(const statistic& s, std::size_t k,
                                                           const std::vector<std::size_t>& grid,
                                                           const count_tables& tables) {
  std::vector<asymptotic_report> out;
  out.reserve(grid.size());
  for (std::size_t n : grid) {
    asymptotic_report r;
    r.n = n;
    auto exact = closed_mean_k(s, n, k, tables);
    if (!exact) throw unknown_statistic("no block-level closed mean for " + s.token());
    r.exact = *exact;
    r.leading = asymptotic_mean_k(s, n, k);
    double e = exact_to_double(r.exact);
    r.ratio = r.leading != 0.0 ? e / r.leading : e;
    r.correction_ratio = r.ratio;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace partstat
