#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "partstat/exact.hpp"
#include "partstat/partition.hpp"
#include "partstat/statistics.hpp"

namespace partstat {

// Bit source: std::mt19937_64, whose output stream is fixed by the standard,
// so seeded runs reproduce across platforms.
using bitstream = std::mt19937_64;

/// Uniform exact integer in [0, bound) by rejection on 64-bit chunks.
inline exact_int uniform_below(bitstream& rng, const exact_int& bound) {
  if (bound <= 0) throw out_of_range("uniform_below requires bound >= 1");
  if (bound == 1) return 0;
  std::size_t bits = boost::multiprecision::msb(bound) + 1;
  std::size_t words = (bits + 63) / 64;
  std::uint64_t top_mask =
      (bits % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bits % 64)) - 1);
  while (true) {
    exact_int v = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t chunk = rng();
      if (w + 1 == words) chunk &= top_mask;
      v |= exact_int(chunk) << (64 * w);
    }
    if (v < bound) return v;
  }
}

struct sampler_config {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

namespace detail {

// Unrank a c-subset of pool (ascending) in lexicographic order.
inline std::vector<std::uint32_t> unrank_combination(exact_int rank,
                                                     const std::vector<std::uint32_t>& pool,
                                                     std::size_t c) {
  std::vector<std::uint32_t> out;
  out.reserve(c);
  std::size_t lo = 0;
  std::size_t remaining = c;
  while (remaining > 0) {
    exact_int skip =
        binomial(static_cast<std::int64_t>(pool.size() - lo - 1),
                 static_cast<std::int64_t>(remaining - 1));
    if (rank < skip) {
      out.push_back(pool[lo]);
      --remaining;
      ++lo;
    } else {
      rank -= skip;
      ++lo;
    }
  }
  return out;
}

inline exact_int rank_combination(const std::vector<std::uint32_t>& chosen,
                                  const std::vector<std::uint32_t>& pool) {
  exact_int rank = 0;
  std::size_t lo = 0, t = 0;
  std::size_t c = chosen.size();
  while (t < c) {
    if (pool[lo] == chosen[t]) {
      ++t;
      ++lo;
    } else {
      rank += binomial(static_cast<std::int64_t>(pool.size() - lo - 1),
                       static_cast<std::int64_t>(c - t - 1));
      ++lo;
    }
  }
  return rank;
}

}  // namespace detail

// Bijection between [0, B_n) and Pi_n: peel off the block of the smallest
// remaining label, whose size j occupies a bucket of width C(m-1,j-1) B_{m-j};
// the in-bucket quotient picks the companions, the remainder recurses.
inline set_partition unrank_partition(std::size_t n, exact_int rank, const count_tables& tables) {
  if (rank < 0 || rank >= tables.bell(static_cast<std::int64_t>(n)))
    throw out_of_range("unrank_partition: rank outside [0, bell(n))");
  std::vector<letter> w(n, 0);
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i + 1);
  letter next_block = 0;
  while (!labels.empty()) {
    std::size_t m = labels.size();
    ++next_block;
    std::size_t size = 0;
    for (std::size_t j = 1; j <= m; ++j) {
      exact_int bucket = binomial(static_cast<std::int64_t>(m - 1),
                                  static_cast<std::int64_t>(j - 1)) *
                         tables.bell(static_cast<std::int64_t>(m - j));
      if (rank < bucket) {
        size = j;
        break;
      }
      rank -= bucket;
    }
    const exact_int& rest_count = tables.bell(static_cast<std::int64_t>(m - size));
    exact_int comb_rank = rank / rest_count;
    rank %= rest_count;
    std::uint32_t head = labels.front();
    std::vector<std::uint32_t> pool(labels.begin() + 1, labels.end());
    auto companions = detail::unrank_combination(comb_rank, pool, size - 1);
    w[head - 1] = next_block;
    std::size_t t = 0;
    std::vector<std::uint32_t> remaining;
    remaining.reserve(pool.size() - companions.size());
    for (std::uint32_t x : pool) {
      if (t < companions.size() && companions[t] == x) {
        w[x - 1] = next_block;
        ++t;
      } else {
        remaining.push_back(x);
      }
    }
    labels = std::move(remaining);
  }
  return set_partition::from_rgf_unchecked(std::move(w));
}

inline exact_int rank_partition(const set_partition& p, const count_tables& tables) {
  auto bs = p.blocks();
  std::size_t n = p.size();
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i + 1);
  exact_int rank = 0;
  for (const auto& block : bs) {
    std::size_t m = labels.size();
    std::size_t j = block.size();
    for (std::size_t s = 1; s < j; ++s)
      rank += binomial(static_cast<std::int64_t>(m - 1), static_cast<std::int64_t>(s - 1)) *
              tables.bell(static_cast<std::int64_t>(m - s));
    std::vector<std::uint32_t> pool(labels.begin() + 1, labels.end());
    std::vector<std::uint32_t> companions(block.begin() + 1, block.end());
    rank += detail::rank_combination(companions, pool) *
            tables.bell(static_cast<std::int64_t>(m - j));
    std::vector<std::uint32_t> remaining;
    std::size_t t = 0;
    for (std::uint32_t x : pool) {
      if (t < companions.size() && companions[t] == x)
        ++t;
      else
        remaining.push_back(x);
    }
    labels = std::move(remaining);
  }
  return rank;
}

// Completion counts for rgf words reaching exactly k blocks: t(m, j) extends
// the Stirling recurrence S_{n,k} = S_{n-1,k-1} + k S_{n-1,k} to a prefix with
// j blocks already open and m letters still to place.
class k_rank_tables {
 public:
  k_rank_tables(std::size_t n, std::size_t k) : n_(n), k_(k), t_((n + 1) * (k + 2), exact_int(0)) {
    if (k < 1 || k > n) throw out_of_range("k_rank_tables requires 1 <= k <= n");
    at(0, k_) = 1;
    for (std::size_t m = 1; m <= n_; ++m)
      for (std::size_t j = 0; j <= k_; ++j) {
        exact_int v = exact_int(j) * at(m - 1, j);
        v += at(m - 1, j + 1);
        at(m, j) = std::move(v);
      }
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }

  const exact_int& completions(std::size_t m, std::size_t j) const {
    return t_[m * (k_ + 2) + j];
  }

  /// S_{n,k}, as the number of completions of the forced first letter.
  const exact_int& total() const { return completions(n_ - 1, 1); }

 private:
  exact_int& at(std::size_t m, std::size_t j) { return t_[m * (k_ + 2) + j]; }

  std::size_t n_, k_;
  std::vector<exact_int> t_;  // (n+1) x (k+2), row-major
};

// Unrank within Pi_n^k in lexicographic rgf order (matches the enumerator).
inline set_partition unrank_partition_k(const k_rank_tables& tk, exact_int rank) {
  if (rank < 0 || rank >= tk.total())
    throw out_of_range("unrank_partition_k: rank outside [0, S_{n,k})");
  std::size_t n = tk.n();
  std::vector<letter> w(n, 0);
  w[0] = 1;
  std::size_t open = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t m = n - i - 1;  // letters after position i
    const exact_int& old_bucket = tk.completions(m, open);
    exact_int span = exact_int(open) * old_bucket;
    if (rank < span) {
      exact_int q = rank / old_bucket;
      w[i] = static_cast<letter>(q.convert_to<std::size_t>() + 1);
      rank -= q * old_bucket;
    } else {
      rank -= span;
      ++open;
      w[i] = static_cast<letter>(open);
    }
  }
  return set_partition::from_rgf_unchecked(std::move(w));
}

inline exact_int rank_partition_k(const k_rank_tables& tk, const set_partition& p) {
  if (p.size() != tk.n() || p.block_count() != tk.k())
    throw out_of_range("rank_partition_k: partition shape mismatch");
  const auto& w = p.word();
  exact_int rank = 0;
  std::size_t open = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t m = tk.n() - i - 1;
    if (w[i] <= open) {
      rank += exact_int(w[i] - 1) * tk.completions(m, open);
    } else {
      rank += exact_int(open) * tk.completions(m, open);
      ++open;
    }
  }
  return rank;
}

// Uniform over Pi_n; each partition has probability exactly 1/B_n.
class partition_sampler {
 public:
  partition_sampler(std::size_t n, std::uint64_t seed, const count_tables& tables)
      : n_(n), tables_(&tables), rng_(seed) {
    if (tables.max_n() < n) throw out_of_range("partition_sampler: tables too small");
  }

  set_partition next() {
    exact_int r = uniform_below(rng_, tables_->bell(static_cast<std::int64_t>(n_)));
    return unrank_partition(n_, std::move(r), *tables_);
  }

 private:
  std::size_t n_;
  const count_tables* tables_;
  bitstream rng_;
};

// Uniform over Pi_n^k via lexicographic unranking.
class partition_k_sampler {
 public:
  partition_k_sampler(std::size_t n, std::size_t k, std::uint64_t seed)
      : tk_(n, k), rng_(seed) {}

  set_partition next() {
    exact_int r = uniform_below(rng_, tk_.total());
    return unrank_partition_k(tk_, std::move(r));
  }

  const k_rank_tables& tables() const { return tk_; }

 private:
  k_rank_tables tk_;
  bitstream rng_;
};

/// One-shot draw, uniform over Pi_n with probability exactly 1/B_n.
inline set_partition sample_partition(std::size_t n, std::uint64_t seed,
                                      const count_tables& tables) {
  partition_sampler s(n, seed, tables);
  return s.next();
}

/// One-shot draw, uniform over Pi_n^k.
inline set_partition sample_partition_k(std::size_t n, std::size_t k, std::uint64_t seed) {
  partition_k_sampler s(n, k, seed);
  return s.next();
}

struct empirical_estimate {
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  std::size_t trials = 0;
};

/// Monte-Carlo mean of a statistic under the uniform distribution.
inline empirical_estimate empirical_mean(const statistic& s, const sampler_config& cfg,
                                         const count_tables& tables) {
  if (cfg.trials < 1) throw out_of_range("empirical_mean requires trials >= 1");
  double sum = 0.0, sumsq = 0.0;
  auto accumulate = [&](const set_partition& p) {
    double v = static_cast<double>(s(p));
    sum += v;
    sumsq += v * v;
  };
  if (cfg.k) {
    partition_k_sampler sampler(cfg.n, *cfg.k, cfg.seed);
    for (std::size_t t = 0; t < cfg.trials; ++t) accumulate(sampler.next());
  } else {
    partition_sampler sampler(cfg.n, cfg.seed, tables);
    for (std::size_t t = 0; t < cfg.trials; ++t) accumulate(sampler.next());
  }
  empirical_estimate e;
  e.trials = cfg.trials;
  double t = static_cast<double>(cfg.trials);
  e.mean = sum / t;
  if (cfg.trials > 1) {
    double var = (sumsq - t * e.mean * e.mean) / (t - 1.0);
    if (var < 0.0) var = 0.0;  // guard rounding
    e.stderr_of_mean = std::sqrt(var / t);
  }
  return e;
}

}  // namespace partstat
