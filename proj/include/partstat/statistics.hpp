#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partstat/enumerate.hpp"
#include "partstat/partition.hpp"

namespace partstat {

/// Sum of (letter - 1) over the rgf; equals |B_2| + 2|B_3| + ... + (k-1)|B_k|.
inline std::uint64_t los(const set_partition& p) {
  std::uint64_t s = 0;
  for (letter v : p.word()) s += v - 1;
  return s;
}

/// Inversions of the rgf: pairs i < j with w_i > w_j.
inline std::uint64_t inv(const set_partition& p) {
  const auto& w = p.word();
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++s;
  return s;
}

inline std::uint64_t blocks_stat(const set_partition& p) { return p.block_count(); }

namespace detail {

inline std::uint64_t crossing_pairs(const std::vector<edge>& es) {
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b) {
      // es sorted by (i, j); a crossing needs i_a < i_b < j_a < j_b
      if (es[a].i < es[b].i && es[b].i < es[a].j && es[a].j < es[b].j) ++s;
    }
  return s;
}

inline std::uint64_t nesting_pairs(const std::vector<edge>& es) {
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (es[a].i < es[b].i && es[b].j < es[a].j) ++s;
  return s;
}

struct block_span {
  std::uint32_t lo, hi;
};

inline std::vector<block_span> block_spans(const set_partition& p) {
  std::vector<block_span> v(p.block_count(), {0, 0});
  const auto& w = p.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto& s = v[w[i] - 1];
    std::uint32_t pos = static_cast<std::uint32_t>(i + 1);
    if (s.lo == 0) s.lo = pos;
    s.hi = pos;
  }
  return v;
}

}  // namespace detail

inline std::uint64_t crol(const set_partition& p) { return detail::crossing_pairs(linear_edges(p)); }
inline std::uint64_t croc(const set_partition& p) { return detail::crossing_pairs(circular_edges(p)); }

/// Nestings of two linear arcs: i_1 < i_2 < j_2 < j_1.
inline std::uint64_t nest2(const set_partition& p) { return detail::nesting_pairs(linear_edges(p)); }

/// Block pairs with min(B) < min(B') < max(B) < max(B').
inline std::uint64_t ov(const set_partition& p) {
  auto sp = detail::block_spans(p);
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = a + 1; b < sp.size(); ++b) {
      // blocks are ordered by minima, so sp[a].lo < sp[b].lo
      if (sp[b].lo < sp[a].hi && sp[a].hi < sp[b].hi) ++s;
    }
  return s;
}

/// Block pairs with min(B) < min(B') <= max(B') < max(B).
inline std::uint64_t emb(const set_partition& p) {
  auto sp = detail::block_spans(p);
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = a + 1; b < sp.size(); ++b)
      if (sp[b].hi < sp[a].hi) ++s;
  return s;
}

/// Like emb but strict: min(B) < min(B') < max(B') < max(B).
inline std::uint64_t strong_emb(const set_partition& p) {
  auto sp = detail::block_spans(p);
  std::uint64_t s = 0;
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = a + 1; b < sp.size(); ++b)
      if (sp[b].lo < sp[b].hi && sp[b].hi < sp[a].hi) ++s;
  return s;
}

// A 2-pattern: word over {1,2} containing both letters.
inline void validate_pattern(std::span<const letter> sigma) {
  bool has1 = false, has2 = false;
  for (letter c : sigma) {
    if (c == 1)
      has1 = true;
    else if (c == 2)
      has2 = true;
    else
      throw invalid_pattern("2-pattern letters must be 1 or 2");
  }
  if (!has1 || !has2) throw invalid_pattern("2-pattern must contain both 1 and 2");
}

namespace detail {

// Number of index tuples i_1 < ... < i_r with word[i_t] == target[t] letterwise.
inline std::uint64_t subsequence_count(std::span<const letter> word,
                                       std::span<const letter> target) {
  std::vector<std::uint64_t> dp(target.size() + 1, 0);
  dp[0] = 1;
  for (letter c : word)
    for (std::size_t t = target.size(); t >= 1; --t)
      if (target[t - 1] == c) dp[t] += dp[t - 1];
  return dp[target.size()];
}

}  // namespace detail

// Occurrences of the 2-pattern sigma in an arbitrary word: index tuples whose
// standardized subword equals sigma. Evaluated per pair of values (a, b),
// a < b, by a subsequence-count DP with a playing 1 and b playing 2.
inline std::uint64_t occ_in_word(std::span<const letter> word, std::span<const letter> sigma) {
  validate_pattern(sigma);
  std::vector<letter> values(word.begin(), word.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::uint64_t total = 0;
  std::vector<letter> projected;
  for (std::size_t a = 0; a < values.size(); ++a)
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      projected.clear();
      for (letter c : word) {
        if (c == values[a])
          projected.push_back(1);
        else if (c == values[b])
          projected.push_back(2);
      }
      total += detail::subsequence_count(projected, sigma);
    }
  return total;
}

inline std::uint64_t occ(const set_partition& p, std::span<const letter> sigma) {
  return occ_in_word(p.word(), sigma);
}

// Klazar pattern containment: the number of |tau|-subsets T of [n] whose
// induced standardized sub-partition equals tau. Scans tuples of blocks of p
// and counts matching position subsequences in the merged pair (general b) word.
inline std::uint64_t klazar_occ(const set_partition& p, const set_partition& tau) {
  std::size_t b = tau.block_count();
  if (tau.size() == 0) return 1;  // only T = {} induces the empty pattern
  if (b > p.block_count() || tau.size() > p.size()) return 0;
  auto pb = p.blocks();
  std::size_t k = pb.size();

  std::vector<std::size_t> choose(b);
  for (std::size_t i = 0; i < b; ++i) choose[i] = i;
  std::uint64_t total = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> merged;  // (position, index into choose)
  std::vector<letter> word;
  std::vector<std::size_t> perm(b);
  while (true) {
    merged.clear();
    for (std::size_t t = 0; t < b; ++t)
      for (std::uint32_t pos : pb[choose[t]]) merged.emplace_back(pos, t);
    std::sort(merged.begin(), merged.end());
    // assign tau's blocks to the chosen blocks in every order; a subsequence
    // equal to tau's rgf letterwise realizes tau with first occurrences in
    // assignment order, so each occurrence is counted exactly once
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      std::vector<std::size_t> slot(b);  // chosen-block index -> tau letter
      for (std::size_t t = 0; t < b; ++t) slot[perm[t]] = t + 1;
      word.clear();
      for (const auto& [pos, t] : merged) word.push_back(static_cast<letter>(slot[t]));
      total += detail::subsequence_count(word, tau.word());
    } while (std::next_permutation(perm.begin(), perm.end()));
    // next b-combination of block indices
    std::size_t i = b;
    while (i > 0 && choose[i - 1] == k - (b - (i - 1))) --i;
    if (i == 0) break;
    ++choose[i - 1];
    for (std::size_t j = i; j < b; ++j) choose[j] = choose[j - 1] + 1;
  }
  return total;
}

// A named statistic, optionally parameterized, as used by the CLI and engine.
class statistic {
 public:
  enum class kind {
    los,
    inv,
    crol,
    croc,
    nest2,
    ov,
    emb,
    strong_emb,
    blocks,
    occ,
    klazar,
  };

  static statistic make(kind k) { return statistic(k, {}); }
  static statistic make_occ(std::vector<letter> sigma) {
    validate_pattern(sigma);
    return statistic(kind::occ, std::move(sigma));
  }
  static statistic make_klazar(set_partition tau) {
    if (tau.size() == 0) throw invalid_pattern("klazar pattern must be nonempty");
    return statistic(kind::klazar, tau.word());
  }

  // Tokens: los inv crol croc nest2 ov emb semb blocks occ:<pattern> klazar:<rgf>
  static statistic parse(std::string_view token) {
    if (token == "los") return make(kind::los);
    if (token == "inv") return make(kind::inv);
    if (token == "crol") return make(kind::crol);
    if (token == "croc") return make(kind::croc);
    if (token == "nest2") return make(kind::nest2);
    if (token == "ov") return make(kind::ov);
    if (token == "emb") return make(kind::emb);
    if (token == "semb") return make(kind::strong_emb);
    if (token == "blocks") return make(kind::blocks);
    if (token.starts_with("occ:")) return make_occ(parse_digits(token.substr(4)));
    if (token.starts_with("klazar:"))
      return make_klazar(set_partition::from_rgf(parse_digits(token.substr(7))));
    throw unknown_statistic("unknown statistic token: " + std::string(token));
  }

  kind id() const { return kind_; }
  const std::vector<letter>& pattern() const { return param_; }

  /// Depth of the Z-statistic decomposition; klazar patterns use their block count.
  std::size_t depth() const {
    if (kind_ == kind::klazar) {
      letter mx = 0;
      for (letter v : param_) mx = std::max(mx, v);
      return mx;
    }
    return 2;
  }

  std::uint64_t operator()(const set_partition& p) const {
    switch (kind_) {
      case kind::los: return los(p);
      case kind::inv: return inv(p);
      case kind::crol: return crol(p);
      case kind::croc: return croc(p);
      case kind::nest2: return nest2(p);
      case kind::ov: return ov(p);
      case kind::emb: return emb(p);
      case kind::strong_emb: return strong_emb(p);
      case kind::blocks: return blocks_stat(p);
      case kind::occ: return occ(p, param_);
      case kind::klazar: return klazar_occ(p, set_partition::from_rgf_unchecked(param_));
    }
    throw unknown_statistic("corrupt statistic");
  }

  std::string token() const {
    switch (kind_) {
      case kind::los: return "los";
      case kind::inv: return "inv";
      case kind::crol: return "crol";
      case kind::croc: return "croc";
      case kind::nest2: return "nest2";
      case kind::ov: return "ov";
      case kind::emb: return "emb";
      case kind::strong_emb: return "semb";
      case kind::blocks: return "blocks";
      case kind::occ: return "occ:" + digits();
      case kind::klazar: return "klazar:" + digits();
    }
    return "?";
  }

  friend bool operator==(const statistic&, const statistic&) = default;

 private:
  statistic(kind k, std::vector<letter> param) : kind_(k), param_(std::move(param)) {}

  static std::vector<letter> parse_digits(std::string_view s) {
    if (s.empty()) throw invalid_pattern("empty pattern");
    std::vector<letter> w;
    for (char c : s) {
      if (c < '1' || c > '9') throw invalid_pattern("pattern must be digits 1-9");
      w.push_back(static_cast<letter>(c - '0'));
    }
    return w;
  }

  std::string digits() const {
    std::string s;
    for (letter v : param_) s += static_cast<char>('0' + v);
    return s;
  }

  kind kind_;
  std::vector<letter> param_;
};

// Z-statistic check (depth 2): stat(pi) must equal the sum of stat over the
// standardized unordered block pairs of pi, for every pi in Pi_n.
// Returns the first counterexample, if any.
inline std::optional<set_partition> z_property_counterexample(const statistic& s, std::size_t n) {
  std::optional<set_partition> witness;
  partition_stream stream(n);
  while (auto p = stream.next()) {
    auto bs = p->blocks();
    std::uint64_t pair_sum = 0;
    for (std::size_t a = 0; a < bs.size(); ++a)
      for (std::size_t b = a + 1; b < bs.size(); ++b) {
        labeled_block lb1(bs[a].begin(), bs[a].end());
        labeled_block lb2(bs[b].begin(), bs[b].end());
        pair_sum += s(standardize({lb1, lb2}));
      }
    if (pair_sum != s(*p)) return *p;
  }
  return witness;
}

inline bool verify_z_property(const statistic& s, std::size_t n) {
  return !z_property_counterexample(s, n).has_value();
}

}  // namespace partstat
