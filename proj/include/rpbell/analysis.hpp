#pragma once

#include <vector>

#include "rpbell/bell.hpp"
#include "rpbell/exact.hpp"
#include "rpbell/polynomial.hpp"
#include "rpbell/restriction.hpp"

namespace rpbell {

struct RootCertificate {
  int degree = 0;
  int distinct_real_negative_roots = 0;
  int squarefree_degree = 0;
  bool all_real_negative = false;
};

// Sturm certification over exact rationals: counts the distinct roots of
// the square-free part in (-B, 0) for a Cauchy bound B and declares
// all-real-negative exactly when that count reaches the square-free degree
// and z = 0 is not a root. No floating point anywhere, so the certificate
// is a proof. The zero polynomial is an error.
RootCertificate certify_real_negative_roots(const IntPolynomial& p);

// a_i^2 >= (1 + 1/i)(1 + 1/(n-i)) a_{i+1} a_{i-1} at every interior index,
// checked in exact arithmetic. Sequences shorter than 3 pass vacuously.
bool check_newton_inequality(const std::vector<ExactInt>& coeffs);

// Strict internal log-concavity a_i^2 > a_{i-1} a_{i+1} wherever both
// neighbors are positive. Entries must be nonnegative.
bool check_strong_log_concavity(const std::vector<ExactInt>& coeffs);

struct MaxIndexReport {
  int n;
  RestrictionVector r;
  int max_index;                 // greatest index attaining the row maximum
  ExactRational darroch_center;  // B_{n+1}(1; r)/B_n(1; r) - (r_p + 1)
  bool within_one;               // |max_index - center| < 1, exactly
  bool on_boundary;              // |max_index - center| = 1, exactly
};

MaxIndexReport max_index_report(int n, const RestrictionVector& r);

}  // namespace rpbell
