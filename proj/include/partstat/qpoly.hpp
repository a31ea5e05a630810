#pragma once

#include <cstddef>
#include <vector>

#include "partstat/exact.hpp"

namespace partstat {

// Dense polynomial in q with exact integer coefficients.
class q_polynomial {
 public:
  q_polynomial() = default;
  explicit q_polynomial(std::vector<exact_int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static q_polynomial one() { return q_polynomial({exact_int(1)}); }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }

  const exact_int& coeff(std::size_t power) const {
    return power < c_.size() ? c_[power] : zero_;
  }
  const std::vector<exact_int>& coefficients() const { return c_; }

  exact_int value_at_one() const {
    exact_int s = 0;
    for (const exact_int& c : c_) s += c;
    return s;
  }

  exact_int derivative_at_one() const {
    exact_int s = 0;
    for (std::size_t p = 1; p < c_.size(); ++p) s += exact_int(p) * c_[p];
    return s;
  }

  void add_term(std::size_t power, const exact_int& c) {
    if (power >= c_.size()) c_.resize(power + 1, exact_int(0));
    c_[power] += c;
    trim();
  }

  /// this * q^s
  q_polynomial shifted(std::size_t s) const {
    if (c_.empty()) return {};
    std::vector<exact_int> r(c_.size() + s, exact_int(0));
    for (std::size_t p = 0; p < c_.size(); ++p) r[p + s] = c_[p];
    return q_polynomial(std::move(r));
  }

  /// this * [k]_q where [k]_q = 1 + q + ... + q^{k-1}
  q_polynomial times_q_bracket(std::size_t k) const {
    if (k == 0 || c_.empty()) return {};
    std::vector<exact_int> r(c_.size() + k - 1, exact_int(0));
    for (std::size_t p = 0; p < c_.size(); ++p)
      for (std::size_t j = 0; j < k; ++j) r[p + j] += c_[p];
    return q_polynomial(std::move(r));
  }

  q_polynomial& operator+=(const q_polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), exact_int(0));
    for (std::size_t p = 0; p < o.c_.size(); ++p) c_[p] += o.c_[p];
    trim();
    return *this;
  }

  friend bool operator==(const q_polynomial& a, const q_polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<exact_int> c_;
  inline static const exact_int zero_{0};
};

// Carlitz q-Stirling polynomial S_{n,k}(q), by the recurrence
//   S_{n,k}(q) = q^{k-1} S_{n-1,k-1}(q) + [k]_q S_{n-1,k}(q)
// with S_{n,k}(q) = delta_{n,k} when n = 0 or k = 0.
// Specializes to the Stirling number at q = 1; its q-derivative at 1 divided by
// S_{n,k} is the mean of the los statistic over k-partitions of [n].
inline q_polynomial q_stirling_poly(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) return (n == k) ? q_polynomial::one() : q_polynomial{};
  if (k > n) return {};
  // row r holds S_{r,j}(q) for j = 0..min(r,k)
  std::vector<q_polynomial> row(1, q_polynomial::one());
  for (std::size_t r = 1; r <= n; ++r) {
    std::size_t top = std::min(r, k);
    std::vector<q_polynomial> next(top + 1);
    next[0] = {};
    for (std::size_t j = 1; j <= top; ++j) {
      q_polynomial acc;
      if (j - 1 < row.size()) acc += row[j - 1].shifted(j - 1);
      if (j < row.size()) acc += row[j].times_q_bracket(j);
      next[j] = std::move(acc);
    }
    row = std::move(next);
  }
  return row[k];
}

}  // namespace partstat
