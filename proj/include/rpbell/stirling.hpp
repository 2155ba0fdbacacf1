#pragma once

#include <atomic>
#include <deque>
#include <mutex>
#include <vector>

#include "rpbell/exact.hpp"
#include "rpbell/polynomial.hpp"

namespace rpbell {

enum class StirlingKind { second, first_unsigned, r_second, r_first_unsigned };

// Memoized triangle of one Stirling family. Rows are grown on demand; a
// finished row is never touched again, so reads need no lock once the
// atomic high-water mark covers them. At most one extension runs at a time.
class StirlingTable {
 public:
  explicit StirlingTable(StirlingKind kind, int r = 0);

  StirlingKind kind() const { return kind_; }
  int r() const { return r_; }

  // {n brace k} / [n brack k] for the table's family. Entries outside
  // 0 <= k <= n are 0. For the r-families n < r is a domain error.
  ExactInt at(int n, int k);

 private:
  void ensure(int n);

  StirlingKind kind_;
  int r_;
  std::deque<std::vector<ExactInt>> rows_;  // rows_[i] is the row n = r_ + i
  std::atomic<int> max_n_;
  std::mutex grow_mutex_;
};

// Shared per-(kind, r) tables; the identity suites hit the same triangles
// thousands of times.
StirlingTable& shared_stirling_table(StirlingKind kind, int r = 0);

ExactInt stirling2(int n, int k);
ExactInt stirling1_unsigned(int n, int k);
ExactInt r_stirling2(int n, int k, int r);
ExactInt r_stirling1_unsigned(int n, int k, int r);

// sum_k {n+r brace k+r}_r z^k; for r = 0 this is the classical Bell
// polynomial sum_k {n brace k} z^k.
IntPolynomial r_bell_polynomial(int n, int r);
inline IntPolynomial classical_bell_polynomial(int n) { return r_bell_polynomial(n, 0); }

// Row sum of r_bell_polynomial: the number of partitions of [n + r] with
// the first r elements in distinct blocks.
ExactInt r_bell_number(int n, int r);

}  // namespace rpbell
