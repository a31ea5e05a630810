#pragma once

// Brute-force oracles for the test suites. These stay independent of the
// library's evaluation paths: naive tuple scans, subset scans and direct
// enumeration sums, used to freeze expected values.

#include <cstdint>
#include <vector>

#include "partstat/enumerate.hpp"
#include "partstat/exact.hpp"
#include "partstat/partition.hpp"
#include "partstat/statistics.hpp"

namespace oracles {

using partstat::exact_int;
using partstat::exact_rat;
using partstat::letter;
using partstat::set_partition;

// Standardize a word by value order (values map order-preservingly onto 1..m).
inline std::vector<letter> standardize_word(const std::vector<letter>& w) {
  std::vector<letter> vals(w);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<letter> out;
  out.reserve(w.size());
  for (letter c : w)
    out.push_back(static_cast<letter>(
        std::lower_bound(vals.begin(), vals.end(), c) - vals.begin() + 1));
  return out;
}

// Naive occurrence count: scan all increasing r-tuples of positions.
inline std::uint64_t naive_occ(const std::vector<letter>& w, const std::vector<letter>& sigma) {
  std::size_t r = sigma.size(), n = w.size();
  if (r > n) return 0;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  std::uint64_t count = 0;
  while (true) {
    std::vector<letter> sub;
    sub.reserve(r);
    for (std::size_t i : idx) sub.push_back(w[i]);
    if (standardize_word(sub) == sigma) ++count;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - (r - (i - 1))) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

// Naive Klazar count: scan all r-subsets of [n], compare induced partitions.
inline std::uint64_t naive_klazar(const set_partition& p, const set_partition& tau) {
  std::size_t r = tau.size(), n = p.size();
  if (r == 0) return 1;
  if (r > n) return 0;
  std::vector<std::uint32_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<std::uint32_t>(i + 1);
  std::uint64_t count = 0;
  while (true) {
    if (partstat::induced_partition(p, idx) == tau) ++count;
    // 1-based positions: slot s is exhausted at n - r + s + 1
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return count;
}

template <typename Stat>
exact_int sum_over_all(std::size_t n, Stat&& stat) {
  exact_int total = 0;
  partstat::for_each_partition(n, [&](const set_partition& p) { total += stat(p); });
  return total;
}

template <typename Stat>
exact_int sum_over_k(std::size_t n, std::size_t k, Stat&& stat) {
  exact_int total = 0;
  partstat::for_each_partition_k(n, k, [&](const set_partition& p) { total += stat(p); });
  return total;
}

inline std::size_t count_all(std::size_t n) {
  std::size_t c = 0;
  partstat::for_each_partition(n, [&](const set_partition&) { ++c; });
  return c;
}

inline std::size_t count_k(std::size_t n, std::size_t k) {
  std::size_t c = 0;
  partstat::for_each_partition_k(n, k, [&](const set_partition&) { ++c; });
  return c;
}

template <typename Stat>
exact_rat brute_mean(std::size_t n, Stat&& stat) {
  return exact_rat(sum_over_all(n, stat), exact_int(count_all(n)));
}

template <typename Stat>
exact_rat brute_mean_k(std::size_t n, std::size_t k, Stat&& stat) {
  return exact_rat(sum_over_k(n, k, stat), exact_int(count_k(n, k)));
}

}  // namespace oracles
