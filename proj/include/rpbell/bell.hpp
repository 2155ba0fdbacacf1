#pragma once

#include "rpbell/exact.hpp"
#include "rpbell/polynomial.hpp"
#include "rpbell/report.hpp"
#include "rpbell/restriction.hpp"

namespace rpbell {

// B_n(z; r) = sum_k {n + |r| brace k + r_p}_r z^k, the row generating
// polynomial of the restricted Stirling numbers at offset indices. Degree
// is exactly n + |prefix| and every coefficient is positive.
class BellPolynomial {
 public:
  BellPolynomial(int n, RestrictionVector r, IntPolynomial poly);

  int n() const { return n_; }
  const RestrictionVector& r() const { return r_; }
  const IntPolynomial& poly() const { return poly_; }

  ExactInt value_at_one() const;

 private:
  int n_;
  RestrictionVector r_;
  IntPolynomial poly_;
};

// The tilde variant of the row polynomial, at the deeper offset
// {n + |r| brace k + |r|}_r; degree exactly n, monic.
class BellTildePolynomial {
 public:
  BellTildePolynomial(int n, RestrictionVector r, IntPolynomial poly);

  int n() const { return n_; }
  const RestrictionVector& r() const { return r_; }
  const IntPolynomial& poly() const { return poly_; }

 private:
  int n_;
  RestrictionVector r_;
  IntPolynomial poly_;
};

BellPolynomial bell_poly(int n, const RestrictionVector& r);
BellTildePolynomial bell_tilde(int n, const RestrictionVector& r);

// (z + r_p)^n (z + r_p falling r_1) ... (z + r_p falling r_{p-1}); its
// falling-basis coefficients are the Bell row, and its integer values
// drive the Dobinski-type expansion.
IntPolynomial poly_P(int n, const RestrictionVector& r);

// B_{n+1} from B_n by the derivative recurrence
// B_{n+1}(z) = z B_n'(z) + (z + r_p) B_n(z).
BellPolynomial bell_next(const BellPolynomial& b);

// Checks the Dobinski-type expansion: exp(-z) sum_k P_n(k; r) z^k / k!
// reproduces B_n(z; r) exactly and all higher coefficients up to `order`
// vanish. Requires order >= deg B_n + 1.
VerificationReport verify_dobinski(int n, const RestrictionVector& r, int order);

}  // namespace rpbell
