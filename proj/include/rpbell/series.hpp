#pragma once

#include <string>
#include <vector>

#include "rpbell/exact.hpp"
#include "rpbell/polynomial.hpp"

namespace rpbell {

// Formal power series over ExactRational, truncated at a stated order.
// Coefficients for powers above the order are unknown, not zero; binary
// operations truncate to the smaller operand order and never claim more.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);  // zero series of the given order
  explicit TruncatedSeries(std::vector<ExactRational> coeffs);  // order = size - 1

  static TruncatedSeries from_poly(const IntPolynomial& p, int order);
  // 1/(1 - a*t) = sum a^n t^n.
  static TruncatedSeries geometric(const ExactRational& a, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExactRational& coeff(int i) const;
  void set_coeff(int i, ExactRational v);
  const std::vector<ExactRational>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator*(const ExactRational& s) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Termwise d/dt; the result is known one order lower.
  TruncatedSeries derivative() const;
  TruncatedSeries truncated(int new_order) const;  // new_order <= order
  TruncatedSeries shifted_up(int k) const;         // multiply by t^k, order grows by k

  std::string str() const;

 private:
  std::vector<ExactRational> coeffs_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// exp(s) for a series with zero constant term, via the recurrence from
// (exp s)' = s' exp s. A nonzero constant term is an error.
TruncatedSeries series_exp(const TruncatedSeries& s);

// 1/s for a series with nonzero constant term.
TruncatedSeries series_inverse(const TruncatedSeries& s);

// Horner evaluation of p at the series argument, truncated at s.order().
TruncatedSeries poly_compose_series(const IntPolynomial& p, const TruncatedSeries& s);

}  // namespace rpbell
