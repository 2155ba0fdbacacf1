#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace rpbell {

// Arbitrary-precision signed integer. Closed under +, -, *; division is
// only available through promotion to ExactRational.
class ExactInt {
 public:
  ExactInt() : v_(0) {}
  ExactInt(long v) : v_(v) {}  // NOLINT: implicit by design
  ExactInt(int v) : v_(static_cast<long>(v)) {}
  explicit ExactInt(const std::string& decimal);

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { a += b; return a; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { a -= b; return a; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { a *= b; return a; }
  ExactInt operator-() const;

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactInt& a, const ExactInt& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactInt& a, const ExactInt& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactInt& a, const ExactInt& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactInt& a, const ExactInt& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactInt& a, const ExactInt& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  ExactInt abs() const;

  // Decimal string, no precision loss. The wire format used by the CLI.
  std::string str() const;

  long to_long() const;  // throws std::overflow_error if out of range

  static ExactInt factorial(unsigned n);
  static ExactInt binomial(unsigned n, unsigned k);
  // Integer power with the 0^0 = 1 convention.
  static ExactInt pow(const ExactInt& base, unsigned exp);
  static ExactInt gcd(const ExactInt& a, const ExactInt& b);

  const mpz_class& raw() const { return v_; }
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

 private:
  mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactInt& v);

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (canonicalized eagerly after every operation).
class ExactRational {
 public:
  ExactRational() : v_(0) {}
  ExactRational(long v) : v_(v) {}  // NOLINT: implicit by design
  ExactRational(int v) : v_(static_cast<long>(v)) {}
  ExactRational(const ExactInt& v) : v_(v.raw()) {}  // NOLINT
  ExactRational(const ExactInt& num, const ExactInt& den);
  ExactRational(long num, long den);

  // Accepts "p" or "p/q".
  static ExactRational parse(const std::string& text);

  ExactInt numerator() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt denominator() const { return ExactInt(mpz_class(v_.get_den())); }

  ExactRational& operator+=(const ExactRational& o) { v_ += o.v_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { v_ -= o.v_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { v_ *= o.v_; return *this; }
  ExactRational& operator/=(const ExactRational& o);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { a += b; return a; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { a -= b; return a; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { a *= b; return a; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { a /= b; return a; }
  ExactRational operator-() const;

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  ExactRational abs() const;

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;

 private:
  explicit ExactRational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& v);

}  // namespace rpbell
