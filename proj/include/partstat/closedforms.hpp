#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partstat/exact.hpp"
#include "partstat/statistics.hpp"

namespace partstat {

// Where the theorem statement and the derivation display disagree, both stay
// callable; canonical resolves to the oracle-validated derivation variant.
enum class formula_variant { canonical, theorem, derivation };

namespace detail {

inline void require_n(std::size_t n) {
  if (n < 1) throw out_of_range("mean formula requires n >= 1");
}

inline void require_nk(std::size_t n, std::size_t k) {
  if (n < 1 || k < 1 || k > n) throw out_of_range("mean formula requires 1 <= k <= n");
}

inline exact_rat rat(std::int64_t a, std::int64_t b = 1) { return exact_rat(a, b); }

inline exact_rat rat_i(const exact_int& a, const exact_int& b) { return exact_rat(a, b); }

inline bool resolve_derivation(formula_variant v) { return v != formula_variant::theorem; }

}  // namespace detail

// ---- q-Stirling distribution S(q), realized by los ----

inline exact_rat mean_los(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  exact_rat q2 = detail::rat_i(t.bell(nn + 2), t.bell(nn));
  exact_rat q1 = detail::rat_i(t.bell(nn + 1), t.bell(nn));
  return detail::rat(-1, 4) * q2 + (detail::rat(nn, 2) + detail::rat(1, 4)) * q1 +
         detail::rat(-nn, 2) + detail::rat(1, 4);
}

inline exact_rat mean_los_k(std::size_t n, std::size_t k, const count_tables& t) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  exact_rat tail = detail::rat(nn + 1 - kk, 2) * detail::rat_i(t.stirling(nn, kk - 1), t.stirling(nn, kk));
  return detail::rat(nn * (kk - 1), 2) - detail::rat_i(binomial(kk, 2), 2) + tail;
}

// Means of the tilde-S(q) distribution, shifted by C(k,2).
inline exact_rat mean_los_tilde_k(std::size_t n, std::size_t k, const count_tables& t) {
  return mean_los_k(n, k, t) - exact_rat(binomial(static_cast<std::int64_t>(k), 2));
}

inline exact_rat mean_los_tilde(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  exact_rat q2 = detail::rat_i(t.bell(nn + 2), t.bell(nn));
  exact_rat q1 = detail::rat_i(t.bell(nn + 1), t.bell(nn));
  return detail::rat(-3, 4) * q2 + (detail::rat(nn, 2) + detail::rat(7, 4)) * q1 -
         detail::rat(nn, 2) - detail::rat(1, 4);
}

// ---- linear crossings ----

inline exact_rat mean_crol(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  exact_rat q2 = detail::rat_i(t.bell(nn + 2), t.bell(nn));
  exact_rat q1 = detail::rat_i(t.bell(nn + 1), t.bell(nn));
  return detail::rat(-5, 4) * q2 + (detail::rat(nn, 2) + detail::rat(9, 4)) * q1 +
         detail::rat(nn, 2) + detail::rat(1, 4);
}

inline exact_rat mean_crol_k(std::size_t n, std::size_t k, const count_tables& t) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  exact_rat tail = detail::rat(3 * (nn + 1 - kk), 2) *
                   detail::rat_i(t.stirling(nn, kk - 1), t.stirling(nn, kk));
  return detail::rat(nn * (kk - 1), 2) - detail::rat(5, 2) * exact_rat(binomial(kk, 2)) + tail;
}

// ---- circular crossings ----
// The theorem statement prints C(n,2) (and 10 C(n,2) at block level) where the
// derivation display has (n)_2; the derivation passes the brute-force oracle,
// the printed theorem fails it at n=4 and (n,k)=(5,3).

inline exact_rat mean_croc(std::size_t n, const count_tables& t,
                           formula_variant v = formula_variant::canonical) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  exact_rat acc = detail::rat(nn, 2) * detail::rat_i(t.bell(nn + 1), bn) + detail::rat(3 * nn, 2);
  acc -= detail::rat(nn * (4 * nn + 1), 2) * detail::rat_i(t.bell(nn - 1), bn);
  exact_int c2 = detail::resolve_derivation(v) ? falling_factorial(nn, 2) : binomial(nn, 2);
  if (c2 != 0) acc -= exact_rat(c2) * detail::rat_i(t.bell(nn - 2), bn);
  exact_int c4 = binomial(nn, 4);  // (n)_4 / 24 in both variants
  if (c4 != 0) acc += exact_rat(c4) * detail::rat_i(t.bell(nn - 4), bn);
  return acc;
}

inline exact_rat mean_croc_k(std::size_t n, std::size_t k, const count_tables& t,
                             formula_variant v = formula_variant::canonical) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  const exact_int& snk = t.stirling(nn, kk);
  exact_rat acc = detail::rat(nn * (kk - 1), 2);
  acc += detail::rat(nn * (5 * kk - 4 * nn - 1), 2) *
         detail::rat_i(t.stirling(nn - 1, kk - 1), snk);
  exact_int c2 = detail::resolve_derivation(v) ? falling_factorial(nn, 2)
                                               : 10 * binomial(nn, 2);
  if (c2 != 0) acc -= exact_rat(c2) * detail::rat_i(t.stirling(nn - 2, kk - 2), snk);
  exact_int c4 = binomial(nn, 4);
  if (c4 != 0) acc += exact_rat(c4) * detail::rat_i(t.stirling(nn - 4, kk - 2), snk);
  return acc;
}

// ---- overlappings ----

inline exact_rat mean_ov(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  return detail::rat(1, 4) * detail::rat_i(t.bell(nn + 2), bn) +
         detail::rat(3, 4) * detail::rat_i(t.bell(nn + 1), bn) - detail::rat(nn) -
         detail::rat(5, 4) - detail::rat(nn, 2) * detail::rat_i(t.bell(nn - 1), bn);
}

// Block level: eq (2.15) as printed disagrees with the derivation display in
// two coefficients; oracle witness (n,k) = (4,2): derivation total 1, theorem 0.
inline exact_rat mean_ov_k(std::size_t n, std::size_t k, const count_tables& t,
                           formula_variant v = formula_variant::canonical) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  const exact_int& snk = t.stirling(nn, kk);
  if (detail::resolve_derivation(v)) {
    return detail::rat(kk * (kk - 1), 4) -
           detail::rat(3 * (nn + 1 - kk), 2) * detail::rat_i(t.stirling(nn, kk - 1), snk) +
           detail::rat(nn * (kk - 1), 2) * detail::rat_i(t.stirling(nn - 1, kk - 1), snk);
  }
  return detail::rat_i(binomial(kk, 2), 2) +
         detail::rat(nn * (kk - 1)) * detail::rat_i(t.stirling(nn - 1, kk - 1), snk) -
         detail::rat(3 * (nn + kk - 1), 2) * detail::rat_i(t.stirling(nn, kk - 1), snk);
}

// ---- embracings ----

inline exact_rat mean_emb(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  return detail::rat(1, 4) * detail::rat_i(t.bell(nn + 2), bn) -
         detail::rat(5, 4) * detail::rat_i(t.bell(nn + 1), bn) + detail::rat(3, 4) +
         detail::rat(nn, 2) * detail::rat_i(t.bell(nn - 1), bn);
}

inline exact_rat mean_emb_k(std::size_t n, std::size_t k, const count_tables& t) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  const exact_int& snk = t.stirling(nn, kk);
  return detail::rat_i(binomial(kk, 2), 2) -
         detail::rat(kk - 1, 2) * detail::rat_i(t.stirling(nn, kk - 1), snk) +
         detail::rat(nn, 2) * detail::rat_i(t.stirling(nn - 1, kk - 2), snk);
}

// ---- inversions (section 3.4 worked example) ----

inline exact_rat mean_inv(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  exact_rat acc = detail::rat(1, 8) * detail::rat_i(t.bell(nn + 2), bn) -
                  (detail::rat(nn, 4) + detail::rat(1, 8)) * detail::rat_i(t.bell(nn + 1), bn) +
                  detail::rat(nn * nn, 4) - detail::rat(1, 8);
  exact_int f2 = falling_factorial(nn, 2);
  if (f2 != 0) acc -= detail::rat_i(f2, 4) * detail::rat_i(t.bell(nn - 1), bn);
  return acc;
}

inline exact_rat mean_inv_k(std::size_t n, std::size_t k, const count_tables& t) {
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k);
  const exact_int& snk = t.stirling(nn, kk);
  return detail::rat(nn * (nn - kk - 1), 4) * (detail::rat(1) - detail::rat(1, kk)) +
         detail::rat(kk * (kk - 1), 8) -
         detail::rat(nn + 1 - kk, 4) * detail::rat_i(t.stirling(nn, kk - 1), snk) +
         detail::rat(nn * (nn - 1), 4 * kk) * detail::rat_i(t.stirling(nn - 1, kk - 1), snk);
}

// ---- occurrences of a 2-pattern, by first letter ----

namespace detail {

/// p_j(n) = (-1)^{r-j} / 2^{r-j+1} * (C(n,j) + C(n,j-1)/2)
inline exact_rat occ_p_coeff(std::size_t n, std::size_t r, std::size_t j) {
  std::int64_t nn = static_cast<std::int64_t>(n), jj = static_cast<std::int64_t>(j);
  exact_rat c = exact_rat(binomial(nn, jj)) + exact_rat(binomial(nn, jj - 1), 2);
  exact_rat base(1, power_of_two(r - j + 1));
  if ((r - j) % 2 == 1) base = -base;
  return base * c;
}

inline exact_rat occ_sign_const(std::size_t r, bool first_is_two) {
  // (-1)^{r+1}/2^{r+1} when sigma_1 = 2, (-1)^r/2^{r+1} when sigma_1 = 1
  exact_rat c(1, power_of_two(r + 1));
  bool negative = first_is_two ? (r % 2 == 0) : (r % 2 == 1);
  return negative ? -c : c;
}

inline void require_occ(std::size_t r, int first_letter) {
  if (r < 2) throw out_of_range("occ mean requires pattern length r >= 2");
  if (first_letter != 1 && first_letter != 2)
    throw out_of_range("occ mean first letter must be 1 or 2");
}

}  // namespace detail

// Average occurrences of any 2-pattern of length r with the given first
// letter; depends on nothing else about the pattern.
inline exact_rat mean_occ_first(std::size_t n, std::size_t r, int first_letter,
                                const count_tables& t) {
  detail::require_occ(r, first_letter);
  std::int64_t nn = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
  const exact_int& bn = t.bell(nn);
  exact_rat acc = detail::occ_sign_const(r, first_letter == 2);
  if (first_letter == 2) {
    for (std::size_t j = 0; j <= r; ++j) {
      exact_rat pj = detail::occ_p_coeff(n, r, j);
      if (pj != 0) acc += pj * detail::rat_i(t.bell(nn + 2 - static_cast<std::int64_t>(j)), bn);
    }
  } else {
    for (std::size_t j = 0; j < r; ++j) {
      exact_rat pj = detail::occ_p_coeff(n, r, j);
      if (pj != 0) acc -= pj * detail::rat_i(t.bell(nn + 2 - static_cast<std::int64_t>(j)), bn);
    }
    exact_rat c = exact_rat(binomial(nn, rr)) - exact_rat(binomial(nn, rr - 1), 2);
    if (c != 0) acc += detail::rat(1, 2) * c * detail::rat_i(t.bell(nn + 2 - rr), bn);
  }
  exact_int cr = binomial(nn, rr);
  if (cr != 0) acc -= detail::rat_i(cr, 2) * detail::rat_i(t.bell(nn + 1 - rr), bn);
  return acc;
}

inline exact_rat mean_occ_first_k(std::size_t n, std::size_t k, std::size_t r, int first_letter,
                                  const count_tables& t) {
  detail::require_occ(r, first_letter);
  detail::require_nk(n, k);
  std::int64_t nn = static_cast<std::int64_t>(n), kk = static_cast<std::int64_t>(k),
               rr = static_cast<std::int64_t>(r);
  const exact_int& snk = t.stirling(nn, kk);
  exact_rat acc = detail::occ_sign_const(r, first_letter == 2) *
                  detail::rat_i(t.stirling(nn, kk - 2), snk);
  if (first_letter == 2) {
    for (std::size_t j = 0; j <= r; ++j) {
      exact_rat pj = detail::occ_p_coeff(n, r, j);
      if (pj != 0)
        acc += pj * detail::rat_i(t.stirling(nn + 2 - static_cast<std::int64_t>(j), kk), snk);
    }
  } else {
    for (std::size_t j = 0; j < r; ++j) {
      exact_rat pj = detail::occ_p_coeff(n, r, j);
      if (pj != 0)
        acc -= pj * detail::rat_i(t.stirling(nn + 2 - static_cast<std::int64_t>(j), kk), snk);
    }
    exact_rat c = exact_rat(binomial(nn, rr)) - exact_rat(binomial(nn, rr - 1), 2);
    if (c != 0) acc += detail::rat(1, 2) * c * detail::rat_i(t.stirling(nn + 2 - rr, kk), snk);
  }
  exact_int cr = binomial(nn, rr);
  if (cr != 0) acc -= detail::rat_i(cr, 2) * detail::rat_i(t.stirling(nn + 1 - rr, kk), snk);
  return acc;
}

// The explicit r = 2 displays (eq mean21 / mean12), kept as written for
// cross-checking mean_occ_first.
inline exact_rat occ_display_r2(std::size_t n, int first_letter, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  exact_rat half_c2 = detail::rat_i(binomial(nn, 2), 2);
  if (first_letter == 2) {
    exact_rat acc = detail::rat(1, 8) * detail::rat_i(t.bell(nn + 2), bn) -
                    (detail::rat(nn, 4) + detail::rat(1, 8)) * detail::rat_i(t.bell(nn + 1), bn) +
                    detail::rat(nn * nn, 4) - detail::rat(1, 8);
    if (half_c2 != 0) acc -= half_c2 * detail::rat_i(t.bell(nn - 1), bn);
    return acc;
  }
  exact_rat acc = detail::rat(-1, 8) * detail::rat_i(t.bell(nn + 2), bn) +
                  (detail::rat(nn, 4) + detail::rat(1, 8)) * detail::rat_i(t.bell(nn + 1), bn) +
                  detail::rat(nn * nn, 4) - detail::rat(nn, 2) + detail::rat(1, 8);
  if (half_c2 != 0) acc -= half_c2 * detail::rat_i(t.bell(nn - 1), bn);
  return acc;
}

// The six explicit r = 3 displays (211 = 212 = 221 and 112 = 121 = 122).
inline exact_rat occ_display_r3(std::size_t n, int first_letter, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  const exact_int& bn = t.bell(nn);
  exact_rat half_c3 = detail::rat_i(binomial(nn, 3), 2);
  if (first_letter == 2) {
    exact_rat acc = detail::rat(-1, 16) * detail::rat_i(t.bell(nn + 2), bn) +
                    detail::rat(1, 8) * (detail::rat(nn) + detail::rat(1, 2)) *
                        detail::rat_i(t.bell(nn + 1), bn) -
                    detail::rat(1, 8) * (detail::rat(nn * nn) - detail::rat(1, 2));
    exact_rat c = detail::rat(1, 12) * detail::rat(nn) * (detail::rat(nn) - detail::rat(1, 2)) *
                  detail::rat(nn - 1);
    if (c != 0) acc += c * detail::rat_i(t.bell(nn - 1), bn);
    if (half_c3 != 0) acc -= half_c3 * detail::rat_i(t.bell(nn - 2), bn);
    return acc;
  }
  exact_rat acc = detail::rat(1, 16) * detail::rat_i(t.bell(nn + 2), bn) -
                  detail::rat(1, 8) * (detail::rat(nn) + detail::rat(1, 2)) *
                      detail::rat_i(t.bell(nn + 1), bn) +
                  detail::rat(1, 8) * (detail::rat(nn * nn) - detail::rat(1, 2));
  exact_rat c = detail::rat(1, 12) * detail::rat(nn) * detail::rat(nn - 1) *
                (detail::rat(nn) - detail::rat(7, 2));
  if (c != 0) acc += c * detail::rat_i(t.bell(nn - 1), bn);
  if (half_c3 != 0) acc -= half_c3 * detail::rat_i(t.bell(nn - 2), bn);
  return acc;
}

// ---- Klazar pattern containment, any 2-block pattern of [r] ----

inline exact_rat mean_klazar(std::size_t n, std::size_t r, const count_tables& t) {
  if (r < 2 || r > n) throw out_of_range("mean_klazar requires 2 <= r <= n");
  std::int64_t nn = static_cast<std::int64_t>(n), rr = static_cast<std::int64_t>(r);
  return detail::rat_i(binomial(nn, rr) * (t.bell(nn + 2 - rr) - t.bell(nn + 1 - rr)),
                       t.bell(nn));
}

// ---- block count ----

inline exact_rat mean_blocks(std::size_t n, const count_tables& t) {
  detail::require_n(n);
  std::int64_t nn = static_cast<std::int64_t>(n);
  return detail::rat_i(t.bell(nn + 1), t.bell(nn)) - 1;
}

// ---- m-regular partitions (all blocks of size m) ----

inline exact_rat regular_linear_mean(std::size_t m, std::size_t k) {
  if (m < 1) throw out_of_range("regular_linear_mean requires m >= 1");
  std::int64_t mm = static_cast<std::int64_t>(m);
  exact_rat core = detail::rat(mm - 2) + exact_rat(2, binomial(2 * mm, mm));
  return exact_rat(binomial(static_cast<std::int64_t>(k), 2)) * core;
}

inline exact_rat regular_circular_mean(std::size_t m, std::size_t k) {
  if (m < 3) throw out_of_range("regular_circular_mean requires m >= 3");
  std::int64_t mm = static_cast<std::int64_t>(m);
  exact_rat core = detail::rat(mm) + detail::rat(1, 2) + detail::rat(1, 2 * (2 * mm - 1)) -
                   exact_rat(4 * mm, binomial(2 * mm, mm));
  return exact_rat(binomial(static_cast<std::int64_t>(k), 2)) * core;
}

// ---- dispatch by statistic, used by the CLI and the oracle triangle ----

inline std::optional<exact_rat> closed_mean(const statistic& s, std::size_t n,
                                            const count_tables& t,
                                            formula_variant v = formula_variant::canonical) {
  using k = statistic::kind;
  switch (s.id()) {
    case k::los: return mean_los(n, t);
    case k::inv: return mean_inv(n, t);
    case k::crol:
    case k::nest2: return mean_crol(n, t);
    case k::croc: return mean_croc(n, t, v);
    case k::ov:
    case k::strong_emb: return mean_ov(n, t);
    case k::emb: return mean_emb(n, t);
    case k::blocks: return mean_blocks(n, t);
    case k::occ:
      return mean_occ_first(n, s.pattern().size(), static_cast<int>(s.pattern().front()), t);
    case k::klazar:
      if (s.depth() != 2 || s.pattern().size() > n) return std::nullopt;
      return mean_klazar(n, s.pattern().size(), t);
  }
  return std::nullopt;
}

inline std::optional<exact_rat> closed_mean_k(const statistic& s, std::size_t n, std::size_t k,
                                              const count_tables& t,
                                              formula_variant v = formula_variant::canonical) {
  using kd = statistic::kind;
  switch (s.id()) {
    case kd::los: return mean_los_k(n, k, t);
    case kd::inv: return mean_inv_k(n, k, t);
    case kd::crol:
    case kd::nest2: return mean_crol_k(n, k, t);
    case kd::croc: return mean_croc_k(n, k, t, v);
    case kd::ov:
    case kd::strong_emb: return mean_ov_k(n, k, t, v);
    case kd::emb: return mean_emb_k(n, k, t);
    case kd::blocks: return exact_rat(k);  // every k-partition has k blocks
    case kd::occ:
      return mean_occ_first_k(n, k, s.pattern().size(), static_cast<int>(s.pattern().front()), t);
    case kd::klazar: return std::nullopt;  // no block-level closed form in the catalog
  }
  return std::nullopt;
}

struct formula_info {
  std::string name;
  std::string domain;
  formula_variant variant;
  bool canonical;
  std::string note;
};

inline std::vector<formula_info> formula_catalog() {
  using fv = formula_variant;
  return {
      {"mean_los", "n >= 1", fv::canonical, true, "q-Stirling distribution S(q)"},
      {"mean_los_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_los_tilde", "n >= 1", fv::canonical, true, "tilde-S(q) distribution"},
      {"mean_los_tilde_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_inv", "n >= 1", fv::canonical, true, "equals mean_occ_first(n,2,2)"},
      {"mean_inv_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_crol", "n >= 1", fv::canonical, true, "also serves nest2 (equidistributed)"},
      {"mean_crol_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_croc", "n >= 1", fv::derivation, true,
       "theorem variant prints C(n,2) B_{n-2}; fails oracle at n=4 (13/15 vs 1/15)"},
      {"mean_croc", "n >= 1", fv::theorem, false, "kept callable as an erratum witness"},
      {"mean_croc_k", "1 <= k <= n", fv::derivation, true,
       "theorem variant prints 10 C(n,2) S_{n-2,k-2}; fails oracle at (5,3) (-3 vs 1/5)"},
      {"mean_croc_k", "1 <= k <= n", fv::theorem, false, "kept callable as an erratum witness"},
      {"mean_ov", "n >= 1", fv::canonical, true, "also serves semb (equidistributed)"},
      {"mean_ov_k", "1 <= k <= n", fv::derivation, true,
       "theorem variant differs in two coefficients; fails oracle at (4,2) (0 vs 1/7)"},
      {"mean_ov_k", "1 <= k <= n", fv::theorem, false, "kept callable as an erratum witness"},
      {"mean_emb", "n >= 1", fv::canonical, true, ""},
      {"mean_emb_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_occ_first", "n >= 0, r >= 2, first in {1,2}", fv::canonical, true,
       "depends only on the first letter of the pattern"},
      {"mean_occ_first_k", "1 <= k <= n", fv::canonical, true, ""},
      {"mean_klazar", "2 <= r <= n", fv::canonical, true, "any 2-block pattern of [r]"},
      {"mean_blocks", "n >= 1", fv::canonical, true, ""},
      {"regular_linear_mean", "m >= 1, k >= 0", fv::canonical, true, ""},
      {"regular_circular_mean", "m >= 3, k >= 0", fv::canonical, true, ""},
  };
}

}  // namespace partstat
