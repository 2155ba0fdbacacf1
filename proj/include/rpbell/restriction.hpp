#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rpbell/exact.hpp"
#include "rpbell/polynomial.hpp"

namespace rpbell {

// The sorted vector (r_1 <= ... <= r_p) of block-separation constraints:
// p consecutive intervals of [n] whose elements must land in pairwise
// distinct blocks. Parts are positive; unsorted input is accepted and
// canonicalized (the counts are symmetric in the parts).
class RestrictionVector {
 public:
  explicit RestrictionVector(std::vector<int> parts);
  RestrictionVector(std::initializer_list<int> parts);

  // "2,2" -> (2,2).
  static RestrictionVector parse(const std::string& csv);

  const std::vector<int>& parts() const { return parts_; }
  int p() const { return static_cast<int>(parts_.size()); }
  int total() const { return total_; }          // |r_p|
  int last() const { return parts_.back(); }    // r_p, the largest part
  std::vector<int> prefix() const;              // (r_1, ..., r_{p-1})
  int prefix_total() const { return total_ - parts_.back(); }

  RestrictionVector incremented_last(int j) const;  // r_p + j*e_p

  friend bool operator==(const RestrictionVector& a, const RestrictionVector& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const RestrictionVector& a, const RestrictionVector& b) {
    return !(a == b);
  }
  friend bool operator<(const RestrictionVector& a, const RestrictionVector& b) {
    return a.parts_ < b.parts_;
  }

  std::string str() const;  // "(2,2)"

 private:
  std::vector<int> parts_;
  int total_;
};

// Coefficients a_k of (u falling r_1) * ... * (u falling r_{p-1}): the
// connection coefficients between the multi-restricted and the plain
// r-Stirling families. Monic of degree sum(prefix); zero below index
// p - 1; signs alternate from the top.
class ACoeffs {
 public:
  explicit ACoeffs(std::vector<ExactInt> values);

  const std::vector<ExactInt>& values() const { return values_; }
  const ExactInt& at(int k) const;  // 0 outside range
  int size() const { return static_cast<int>(values_.size()); }

 private:
  std::vector<ExactInt> values_;
};

// Computed by multiplying falling-factorial polynomials; the defining
// signed sum over products of unsigned first-kind Stirling numbers is run
// as a cross-check. Cached per (sorted) prefix.
ACoeffs a_coeffs(const std::vector<int>& prefix);

// The signed-sum route on its own, for the agreement tests.
ACoeffs a_coeffs_via_stirling(const std::vector<int>& prefix);

// The row {n brace k + r_p}_r for k = 0 .. n - |r| + |prefix|, obtained by
// expanding (z + r_p)^(n - |r|) * prod (z + r_p falling r_i) in the
// falling-factorial basis. Requires n >= |r|.
std::vector<ExactInt> rp_stirling_row(int n, const RestrictionVector& r);

// Number of partitions of [n] into k nonempty blocks with every
// restriction interval separated. Zero when k < r_p or k > n.
ExactInt rp_stirling2(int n, int k, const RestrictionVector& r);

// Same value through the reduction to plain r-Stirling numbers:
// {n brace k}_r = sum_j a_j(prefix) * {n - |prefix| + j brace k}_{r_p}.
ExactInt rp_stirling2_via_reduction(int n, int k, const RestrictionVector& r);

namespace detail {
// (z + r_p)^n * (z + r_p falling r_1) * ... * (z + r_p falling r_{p-1}).
IntPolynomial restricted_poly_product(int n, const RestrictionVector& r);
}  // namespace detail

}  // namespace rpbell
