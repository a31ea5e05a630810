#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "partstat/exact.hpp"

namespace partstat {

using letter = std::uint32_t;

// A set partition of [n] stored canonically as a restricted growth function:
// w_1 = 1 and each letter is at most one more than the running maximum.
// Block j is the set of positions carrying letter j; with this encoding the
// blocks are automatically in standard form (sorted by minima, each ascending).
class set_partition {
 public:
  set_partition() = default;  // the empty partition of [0]

  static set_partition from_rgf(std::vector<letter> w) {
    letter running_max = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 1) throw invalid_rgf("rgf letter < 1 at position " + std::to_string(i + 1));
      if (i == 0 && w[i] != 1) throw invalid_rgf("rgf must start with 1");
      if (w[i] > running_max + 1)
        throw invalid_rgf("rgf letter jump at position " + std::to_string(i + 1));
      running_max = std::max(running_max, w[i]);
    }
    return set_partition(std::move(w), running_max);
  }

  // For generators that produce valid words by construction.
  static set_partition from_rgf_unchecked(std::vector<letter> w) {
    letter mx = 0;
    for (letter v : w) mx = std::max(mx, v);
    return set_partition(std::move(w), mx);
  }

  std::size_t size() const { return w_.size(); }          // n
  std::size_t block_count() const { return k_; }          // k
  const std::vector<letter>& word() const { return w_; }

  /// Blocks in standard form; positions are 1-based.
  std::vector<std::vector<std::uint32_t>> blocks() const {
    std::vector<std::vector<std::uint32_t>> b(k_);
    for (std::size_t i = 0; i < w_.size(); ++i) b[w_[i] - 1].push_back(static_cast<std::uint32_t>(i + 1));
    return b;
  }

  friend bool operator==(const set_partition&, const set_partition&) = default;
  friend std::strong_ordering operator<=>(const set_partition& a, const set_partition& b) {
    return a.w_ <=> b.w_;
  }

 private:
  set_partition(std::vector<letter> w, letter k) : w_(std::move(w)), k_(k) {}

  std::vector<letter> w_;
  letter k_ = 0;
};

// One block of labels drawn from the positive integers.
using labeled_block = std::vector<std::uint64_t>;

/// Order-preserving relabeling of the union onto [n], then standard form.
inline set_partition standardize(const std::vector<labeled_block>& blocks) {
  std::vector<std::uint64_t> all;
  for (const labeled_block& b : blocks) {
    if (b.empty()) throw overlapping_blocks("empty block");
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw overlapping_blocks("blocks intersect");

  auto rank = [&](std::uint64_t x) {
    return static_cast<std::uint32_t>(std::lower_bound(all.begin(), all.end(), x) - all.begin());
  };
  // order blocks by their minima, then write the rgf
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t j = 0; j < blocks.size(); ++j)
    order.emplace_back(*std::min_element(blocks[j].begin(), blocks[j].end()), j);
  std::sort(order.begin(), order.end());
  std::vector<letter> w(all.size(), 0);
  letter next = 0;
  for (const auto& [mn, j] : order) {
    ++next;
    for (std::uint64_t x : blocks[j]) w[rank(x)] = next;
  }
  return set_partition::from_rgf_unchecked(std::move(w));
}

struct edge {
  std::uint32_t i = 0;  // i < j
  std::uint32_t j = 0;
  friend bool operator==(const edge&, const edge&) = default;
  friend std::strong_ordering operator<=>(const edge&, const edge&) = default;
};

/// Consecutive-element arcs of every block, sorted by (i, j).
inline std::vector<edge> linear_edges(const set_partition& p) {
  std::vector<edge> es;
  for (const auto& b : p.blocks())
    for (std::size_t t = 0; t + 1 < b.size(); ++t) es.push_back({b[t], b[t + 1]});
  std::sort(es.begin(), es.end());
  return es;
}

// Circular chords: per block the consecutive pairs plus the (min,max) chord,
// deduplicated as a set (for a 2-element block both coincide), no self-loops.
inline std::vector<edge> circular_edges(const set_partition& p) {
  std::vector<edge> es;
  for (const auto& b : p.blocks()) {
    for (std::size_t t = 0; t + 1 < b.size(); ++t) es.push_back({b[t], b[t + 1]});
    if (b.size() >= 3) es.push_back({b.front(), b.back()});
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

/// Restrict p to the positions in t (1-based, subset of [n]) and standardize.
inline set_partition induced_partition(const set_partition& p, std::vector<std::uint32_t> t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (!t.empty() && (t.front() < 1 || t.back() > p.size()))
    throw out_of_range("induced_partition: position outside [n]");
  const auto& w = p.word();
  // letters of the kept positions, relabeled by first occurrence
  std::vector<letter> map(p.block_count() + 1, 0);
  std::vector<letter> sub;
  sub.reserve(t.size());
  letter next = 0;
  for (std::uint32_t pos : t) {
    letter v = w[pos - 1];
    if (map[v] == 0) map[v] = ++next;
    sub.push_back(map[v]);
  }
  return set_partition::from_rgf_unchecked(std::move(sub));
}

inline std::string to_rgf_string(const set_partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.word().size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p.word()[i]);
  }
  return s;
}

inline std::string to_block_string(const set_partition& p) {
  std::string s;
  auto bs = p.blocks();
  for (std::size_t j = 0; j < bs.size(); ++j) {
    if (j) s += '/';
    for (std::size_t t = 0; t < bs[j].size(); ++t) {
      if (t) s += ' ';
      s += std::to_string(bs[j][t]);
    }
  }
  return s;
}

// Accepts the canonical rgf form "1 2 3 1 2" or block form "1 4 7/2/3 9/5/6 8".
// Block input must partition [n] exactly.
inline set_partition parse_partition(std::string_view text) {
  std::string s(text);
  if (s.find('/') == std::string::npos) {
    std::istringstream in(s);
    std::vector<letter> w;
    long long v;
    while (in >> v) {
      if (v < 1) throw invalid_rgf("rgf letters must be positive");
      w.push_back(static_cast<letter>(v));
    }
    if (!in.eof()) throw invalid_rgf("rgf parse error: " + s);
    return set_partition::from_rgf(std::move(w));
  }
  std::vector<labeled_block> blocks;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('/', start);
    if (end == std::string::npos) end = s.size();
    std::istringstream in(s.substr(start, end - start));
    labeled_block b;
    long long v;
    while (in >> v) {
      if (v < 1) throw invalid_rgf("block elements must be positive");
      b.push_back(static_cast<std::uint64_t>(v));
    }
    if (b.empty()) throw invalid_rgf("empty block in: " + s);
    blocks.push_back(std::move(b));
    if (end == s.size()) break;
    start = end + 1;
  }
  std::uint64_t n = 0, mx = 0;
  for (const auto& b : blocks) {
    n += b.size();
    for (auto x : b) mx = std::max(mx, x);
  }
  if (mx != n) throw invalid_rgf("blocks must partition 1..n exactly");
  return standardize(blocks);
}

}  // namespace partstat
