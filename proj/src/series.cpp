#include "rpbell/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rpbell {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
  coeffs_.assign(static_cast<size_t>(order) + 1, ExactRational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient vector");
}

TruncatedSeries TruncatedSeries::from_poly(const IntPolynomial& p, int order) {
  TruncatedSeries s(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) {
    s.coeffs_[static_cast<size_t>(i)] = ExactRational(p.coeff(i));
  }
  return s;
}

TruncatedSeries TruncatedSeries::geometric(const ExactRational& a, int order) {
  TruncatedSeries s(order);
  ExactRational pw(1);
  for (int i = 0; i <= order; ++i) {
    s.coeffs_[static_cast<size_t>(i)] = pw;
    pw *= a;
  }
  return s;
}

const ExactRational& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order()) {
    throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
  }
  return coeffs_[static_cast<size_t>(i)];
}

void TruncatedSeries::set_coeff(int i, ExactRational v) {
  if (i < 0 || i > order()) {
    throw std::out_of_range("TruncatedSeries: coefficient beyond truncation order");
  }
  coeffs_[static_cast<size_t>(i)] = std::move(v);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  coeffs_.resize(static_cast<size_t>(std::min(order(), o.order())) + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  coeffs_.resize(static_cast<size_t>(std::min(order(), o.order())) + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r += b;
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r = a;
  r -= b;
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries r(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      r.coeffs_[static_cast<size_t>(i + j)] += a.coeffs_[static_cast<size_t>(i)] *
                                               b.coeffs_[static_cast<size_t>(j)];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const ExactRational& s) const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() < 1) throw std::domain_error("TruncatedSeries: derivative of order-0 series");
  TruncatedSeries r(order() - 1);
  for (int i = 1; i <= order(); ++i) {
    r.coeffs_[static_cast<size_t>(i - 1)] =
        coeffs_[static_cast<size_t>(i)] * ExactRational(static_cast<long>(i));
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw std::invalid_argument("TruncatedSeries: cannot raise truncation order");
  }
  TruncatedSeries r(new_order);
  for (int i = 0; i <= new_order; ++i) r.coeffs_[static_cast<size_t>(i)] = coeff(i);
  return r;
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
  if (k < 0) throw std::invalid_argument("TruncatedSeries: negative shift");
  TruncatedSeries r(order() + k);
  for (int i = 0; i <= order(); ++i) {
    r.coeffs_[static_cast<size_t>(i + k)] = coeffs_[static_cast<size_t>(i)];
  }
  return r;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= order(); ++i) {
    if (coeff(i).is_zero()) continue;
    os << (first ? "" : " + ") << coeff(i).str();
    if (i > 0) os << "*t^" << i;
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << order() + 1 << ")";
  return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries series_exp(const TruncatedSeries& s) {
  if (!s.coeff(0).is_zero()) {
    throw std::domain_error("series_exp: argument has nonzero constant term");
  }
  int n = s.order();
  TruncatedSeries g(n);
  g.set_coeff(0, ExactRational(1));
  // n*g_n = sum_{j=1..n} j*s_j*g_{n-j}, from g' = s'*g.
  for (int m = 1; m <= n; ++m) {
    ExactRational acc(0);
    for (int j = 1; j <= m; ++j) {
      acc += ExactRational(static_cast<long>(j)) * s.coeff(j) * g.coeff(m - j);
    }
    g.set_coeff(m, acc / ExactRational(static_cast<long>(m)));
  }
  return g;
}

TruncatedSeries series_inverse(const TruncatedSeries& s) {
  if (s.coeff(0).is_zero()) {
    throw std::domain_error("series_inverse: constant term is zero");
  }
  int n = s.order();
  TruncatedSeries b(n);
  b.set_coeff(0, ExactRational(1) / s.coeff(0));
  for (int m = 1; m <= n; ++m) {
    ExactRational acc(0);
    for (int j = 1; j <= m; ++j) acc += s.coeff(j) * b.coeff(m - j);
    b.set_coeff(m, -acc / s.coeff(0));
  }
  return b;
}

TruncatedSeries poly_compose_series(const IntPolynomial& p, const TruncatedSeries& s) {
  TruncatedSeries acc(s.order());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * s;
    acc.set_coeff(0, acc.coeff(0) + ExactRational(p.coeff(i)));
  }
  return acc;
}

}  // namespace rpbell
