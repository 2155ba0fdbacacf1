#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rpbell/exact.hpp"

namespace rpbell {

// Dense univariate polynomial over ExactInt, indexed by degree. Trailing
// zeros are trimmed; the zero polynomial has an empty coefficient vector
// and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(ExactInt c);
  static IntPolynomial variable();                    // z
  static IntPolynomial monomial(ExactInt c, int deg);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const ExactInt& coeff(int i) const;  // 0 outside [0, degree]
  const std::vector<ExactInt>& coeffs() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { a += b; return a; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { a -= b; return a; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  IntPolynomial operator*(const ExactInt& s) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  IntPolynomial derivative() const;
  IntPolynomial shifted_up(int k) const;  // multiply by z^k

  ExactInt eval(const ExactInt& x) const;
  ExactRational eval(const ExactRational& x) const;

  std::string str() const;  // e.g. "z^2 + 3*z + 2", for diagnostics

 private:
  void trim();
  std::vector<ExactInt> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

// (z + shift)(z + shift - 1) ... (z + shift - r + 1); the empty product
// (r = 0) is the constant 1.
IntPolynomial falling_factorial_poly(const ExactInt& shift, int r);

// Coefficients c_k with p(z) = sum_k c_k * z(z-1)...(z-k+1), obtained from
// the expansion of z^m over the ordinary Stirling triangle. Length is
// degree + 1 (empty for the zero polynomial).
std::vector<ExactInt> to_falling_basis(const IntPolynomial& p);

// Inverse of to_falling_basis.
IntPolynomial from_falling_basis(const std::vector<ExactInt>& coeffs);

}  // namespace rpbell
