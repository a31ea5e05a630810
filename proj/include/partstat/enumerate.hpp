#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "partstat/exact.hpp"
#include "partstat/partition.hpp"

namespace partstat {

// Streams every partition of [n] exactly once, in lexicographic rgf order.
// O(n) state; single consumer.
class partition_stream {
 public:
  explicit partition_stream(std::size_t n) : n_(n), w_(n, 1), mx_(n, 1) {}

  std::optional<set_partition> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return set_partition::from_rgf_unchecked(w_);
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return set_partition::from_rgf_unchecked(w_);
  }

 private:
  bool advance() {
    if (n_ <= 1) return false;
    for (std::size_t i = n_ - 1; i >= 1; --i) {
      if (w_[i] <= mx_[i - 1]) {
        ++w_[i];
        mx_[i] = std::max(mx_[i - 1], w_[i]);
        for (std::size_t j = i + 1; j < n_; ++j) {
          w_[j] = 1;
          mx_[j] = mx_[j - 1];
        }
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<letter> w_;
  std::vector<letter> mx_;  // running maxima
  bool first_ = true;
  bool done_ = false;
};

// Streams the k-block partitions of [n] in lexicographic rgf order.
class partition_k_stream {
 public:
  partition_k_stream(std::size_t n, std::size_t k) : n_(n), k_(k) {
    if (k_ > n_ || (k_ == 0 && n_ > 0)) {
      done_ = true;
      return;
    }
    if (n_ == 0) return;  // single empty partition, k == 0
    // minimal word: ones, then the forced ramp 2..k at the tail
    w_.assign(n_, 1);
    mx_.assign(n_, 1);
    for (std::size_t j = 0; j < k_ - 1; ++j) w_[n_ - (k_ - 1) + j] = static_cast<letter>(j + 2);
    recompute_max(1);
  }

  std::optional<set_partition> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return set_partition::from_rgf_unchecked(w_);
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return set_partition::from_rgf_unchecked(w_);
  }

 private:
  void recompute_max(std::size_t from) {
    for (std::size_t j = std::max<std::size_t>(from, 1); j < n_; ++j)
      mx_[j] = std::max(mx_[j - 1], w_[j]);
  }

  bool advance() {
    if (n_ <= 1) return false;
    for (std::size_t i = n_ - 1; i >= 1; --i) {
      letter m = mx_[i - 1];
      letter c = w_[i] + 1;
      letter cap = std::min<letter>(m + 1, static_cast<letter>(k_));
      if (c > cap) continue;
      letter cur = std::max(m, c);
      // enough room after i to introduce the remaining new letters?
      if (k_ - cur > n_ - 1 - i) continue;
      w_[i] = c;
      mx_[i] = cur;
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (k_ - cur == n_ - j) {
          w_[j] = ++cur;
        } else {
          w_[j] = 1;
        }
        mx_[j] = cur;
      }
      return true;
    }
    return false;
  }

  std::size_t n_, k_;
  std::vector<letter> w_;
  std::vector<letter> mx_;
  bool first_ = true;
  bool done_ = false;
};

template <typename F>
void for_each_partition(std::size_t n, F&& f) {
  partition_stream s(n);
  while (auto p = s.next()) f(*p);
}

template <typename F>
void for_each_partition_k(std::size_t n, std::size_t k, F&& f) {
  partition_k_stream s(n, k);
  while (auto p = s.next()) f(*p);
}

namespace detail {

template <typename F>
void regular_rec(std::size_t m, std::vector<std::uint32_t>& free_labels, std::vector<letter>& w,
                 letter next_block, F& f) {
  if (free_labels.empty()) {
    f(set_partition::from_rgf_unchecked(w));
    return;
  }
  // the smallest free label opens the next block; choose its m-1 companions
  std::uint32_t head = free_labels.front();
  std::vector<std::uint32_t> rest(free_labels.begin() + 1, free_labels.end());
  std::vector<std::size_t> idx(m - 1);
  for (std::size_t i = 0; i < m - 1; ++i) idx[i] = i;
  auto emit = [&] {
    w[head - 1] = next_block;
    std::vector<std::uint32_t> remaining;
    remaining.reserve(rest.size() - (m - 1));
    std::size_t t = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (t < idx.size() && idx[t] == i) {
        w[rest[i] - 1] = next_block;
        ++t;
      } else {
        remaining.push_back(rest[i]);
      }
    }
    regular_rec(m, remaining, w, next_block + 1, f);
  };
  if (m == 1) {
    emit();
    return;
  }
  while (true) {
    emit();
    // next combination of indices into rest, lexicographic
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] == rest.size() - (idx.size() - (i - 1))) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Partitions of [mk] into k blocks all of size m, each exactly once.
template <typename F>
void for_each_regular(std::size_t m, std::size_t k, F&& f) {
  if (m < 1) throw out_of_range("for_each_regular: m must be >= 1");
  std::size_t n = m * k;
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::uint32_t>(i + 1);
  std::vector<letter> w(n, 0);
  detail::regular_rec(m, labels, w, 1, f);
}

/// (mk)! / (k! (m!)^k)
inline exact_int regular_count(std::size_t m, std::size_t k) {
  if (m < 1) throw out_of_range("regular_count: m must be >= 1");
  exact_int r = factorial(m * k) / factorial(k);
  exact_int mf = factorial(m);
  for (std::size_t i = 0; i < k; ++i) r /= mf;
  return r;
}

}  // namespace partstat
