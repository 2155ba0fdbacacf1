#include "rpbell/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace rpbell {

ExactInt::ExactInt(const std::string& decimal) {
  if (v_.set_str(decimal, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
  }
}

ExactInt ExactInt::operator-() const {
  ExactInt r;
  r.v_ = -v_;
  return r;
}

ExactInt ExactInt::abs() const {
  ExactInt r;
  r.v_ = ::abs(v_);
  return r;
}

std::string ExactInt::str() const { return v_.get_str(10); }

long ExactInt::to_long() const {
  if (!v_.fits_slong_p()) throw std::overflow_error("ExactInt does not fit in long: " + str());
  return v_.get_si();
}

ExactInt ExactInt::factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::pow(const ExactInt& base, unsigned exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.raw().get_mpz_t(), exp);
  return ExactInt(std::move(r));
}

ExactInt ExactInt::gcd(const ExactInt& a, const ExactInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }

ExactRational::ExactRational(const ExactInt& num, const ExactInt& den) : v_(num.raw(), den.raw()) {
  if (den.is_zero()) throw std::invalid_argument("ExactRational: zero denominator");
  v_.canonicalize();
}

ExactRational::ExactRational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
  v_.canonicalize();
}

ExactRational ExactRational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(ExactInt(text));
  ExactInt num(text.substr(0, slash));
  ExactInt den(text.substr(slash + 1));
  return ExactRational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
  if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
  v_ /= o.v_;
  return *this;
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-v_)); }

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(v_))); }

std::string ExactRational::str() const {
  if (is_integer()) return v_.get_num().get_str(10);
  return v_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const ExactRational& v) { return os << v.str(); }

}  // namespace rpbell
