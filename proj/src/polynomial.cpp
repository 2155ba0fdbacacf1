#include "rpbell/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "rpbell/stirling.hpp"

namespace rpbell {

namespace {
const ExactInt kZero(0);
}

IntPolynomial::IntPolynomial(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(ExactInt c) {
  IntPolynomial p;
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::variable() { return monomial(ExactInt(1), 1); }

IntPolynomial IntPolynomial::monomial(ExactInt c, int deg) {
  IntPolynomial p;
  if (c.is_zero()) return p;
  p.coeffs_.assign(static_cast<size_t>(deg) + 1, kZero);
  p.coeffs_.back() = std::move(c);
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ExactInt& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), kZero);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<ExactInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, ExactInt(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator*(const ExactInt& s) const {
  if (s.is_zero()) return IntPolynomial();
  IntPolynomial r(*this);
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<ExactInt> r(coeffs_.size() - 1, ExactInt(0));
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    r[i - 1] = coeffs_[i] * ExactInt(static_cast<long>(i));
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::invalid_argument("shifted_up: negative shift");
  std::vector<ExactInt> r(coeffs_.size() + static_cast<size_t>(k), kZero);
  for (size_t i = 0; i < coeffs_.size(); ++i) r[i + static_cast<size_t>(k)] = coeffs_[i];
  return IntPolynomial(std::move(r));
}

ExactInt IntPolynomial::eval(const ExactInt& x) const {
  ExactInt acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ExactRational IntPolynomial::eval(const ExactRational& x) const {
  ExactRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + ExactRational(*it);
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const ExactInt& c = coeff(i);
    if (c.is_zero()) continue;
    ExactInt a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == ExactInt(1));
    if (i == 0) {
      os << a.str();
    } else {
      if (!unit) os << a.str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPolynomial falling_factorial_poly(const ExactInt& shift, int r) {
  if (r < 0) throw std::invalid_argument("falling_factorial_poly: negative length");
  IntPolynomial prod = IntPolynomial::constant(ExactInt(1));
  for (int i = 0; i < r; ++i) {
    IntPolynomial factor({0, 1});  // z
    factor += IntPolynomial::constant(shift - ExactInt(i));
    prod = prod * factor;
  }
  return prod;
}

std::vector<ExactInt> to_falling_basis(const IntPolynomial& p) {
  std::vector<ExactInt> out(static_cast<size_t>(p.degree() + 1), ExactInt(0));
  // z^m = sum_k {m brace k} z^(k falling), so c_k = sum_m p_m {m brace k}.
  for (int k = 0; k <= p.degree(); ++k) {
    for (int m = k; m <= p.degree(); ++m) {
      out[static_cast<size_t>(k)] += p.coeff(m) * stirling2(m, k);
    }
  }
  return out;
}

IntPolynomial from_falling_basis(const std::vector<ExactInt>& coeffs) {
  IntPolynomial acc;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    acc += falling_factorial_poly(ExactInt(0), static_cast<int>(k)) * coeffs[k];
  }
  return acc;
}

}  // namespace rpbell
