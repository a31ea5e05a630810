#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace partstat {

// All counting is exact: arbitrary-precision integers and reduced rationals.
using exact_int = boost::multiprecision::cpp_int;
using exact_rat = boost::multiprecision::cpp_rational;

struct invalid_rgf : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct overlapping_blocks : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_pattern : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct unknown_statistic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct insufficient_sequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct out_of_range : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct division_by_zero_count : std::logic_error {
  using std::logic_error::logic_error;
};

inline double exact_to_double(const exact_rat& r) {
  return r.convert_to<double>();
}

inline double exact_to_double(const exact_int& v) {
  return v.convert_to<double>();
}

inline std::string to_decimal_string(const exact_int& v) { return v.str(); }

/// "p/q" with q > 0, "p" when q == 1.
inline std::string to_fraction_string(const exact_rat& r) {
  exact_int num = boost::multiprecision::numerator(r);
  exact_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline exact_int power_of_two(std::size_t e) { return exact_int(1) << e; }

inline exact_int factorial(std::size_t n) {
  exact_int f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Binomial coefficient, n >= 0 only (no formula here needs negative n).
inline exact_int binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw out_of_range("binomial: negative n not supported");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  exact_int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // divides exactly at each step
  }
  return r;
}

/// Lower factorial x(x-1)...(x-k+1); empty product for k = 0.
inline exact_int falling_factorial(std::int64_t x, std::size_t k) {
  exact_int r = 1;
  for (std::size_t i = 0; i < k; ++i) r *= exact_int(x) - static_cast<std::int64_t>(i);
  return r;
}

// Stirling number of the second kind via the inclusion-exclusion sum
//   (1/k!) sum_j (-1)^j C(k,j) (k-j)^n.
// Independent of the recurrence-built tables below; used as a cross-check.
inline exact_int stirling2_summation(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (n == 0) return 1;  // k == 0 here
  if (k == 0) return 0;
  exact_int acc = 0;
  for (std::size_t j = 0; j <= k; ++j) {
    exact_int term = binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j)) *
                     boost::multiprecision::pow(exact_int(k - j), static_cast<unsigned>(n));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc / factorial(k);  // exact division
}

// Memoized Bell sequence and Stirling triangle, built once for a fixed size.
// Immutable after construction; growing produces a new table.
class count_tables {
 public:
  explicit count_tables(std::size_t max_n) { build(max_n); }

  std::size_t max_n() const { return rows_.size() - 1; }

  // S_{n,k}; zero outside the triangle, throws if n exceeds the table.
  const exact_int& stirling(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0) return zero_;
    if (static_cast<std::size_t>(n) >= rows_.size())
      throw out_of_range("count_tables: stirling index " + std::to_string(n) +
                         " beyond table size " + std::to_string(max_n()));
    if (k > n) return zero_;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  const exact_int& bell(std::int64_t n) const {
    if (n < 0) return zero_;
    if (static_cast<std::size_t>(n) >= bell_.size())
      throw out_of_range("count_tables: bell index " + std::to_string(n) +
                         " beyond table size " + std::to_string(max_n()));
    return bell_[static_cast<std::size_t>(n)];
  }

  /// New table covering new_max; rows already computed are reused.
  count_tables extended(std::size_t new_max) const {
    if (new_max <= max_n()) return *this;
    count_tables t(*this);
    t.grow(new_max);
    return t;
  }

 private:
  void build(std::size_t max_n) {
    rows_.assign(1, std::vector<exact_int>{exact_int(1)});
    bell_.assign(1, exact_int(1));
    grow(max_n);
  }

  void grow(std::size_t max_n) {
    for (std::size_t n = rows_.size(); n <= max_n; ++n) {
      std::vector<exact_int> row(n + 1);
      row[0] = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        // S_{n,k} = S_{n-1,k-1} + k S_{n-1,k}
        row[k] = rows_[n - 1][k - 1];
        if (k < n) row[k] += exact_int(k) * rows_[n - 1][k];
      }
      exact_int b = 0;
      for (const exact_int& s : row) b += s;
      rows_.push_back(std::move(row));
      bell_.push_back(std::move(b));
    }
  }

  std::vector<std::vector<exact_int>> rows_;
  std::vector<exact_int> bell_;
  inline static const exact_int zero_{0};
};

}  // namespace partstat
