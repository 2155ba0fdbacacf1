#include "rpbell/bell.hpp"

#include <stdexcept>

#include "rpbell/series.hpp"

namespace rpbell {

BellPolynomial::BellPolynomial(int n, RestrictionVector r, IntPolynomial poly)
    : n_(n), r_(std::move(r)), poly_(std::move(poly)) {
  if (poly_.degree() != n_ + r_.prefix_total()) {
    throw std::logic_error("BellPolynomial: degree must be n + |prefix|");
  }
}

ExactInt BellPolynomial::value_at_one() const { return poly_.eval(ExactInt(1)); }

BellTildePolynomial::BellTildePolynomial(int n, RestrictionVector r, IntPolynomial poly)
    : n_(n), r_(std::move(r)), poly_(std::move(poly)) {
  if (poly_.degree() != n_) throw std::logic_error("BellTildePolynomial: degree must be n");
}

BellPolynomial bell_poly(int n, const RestrictionVector& r) {
  if (n < 0) throw std::domain_error("bell_poly: negative index");
  return BellPolynomial(n, r, IntPolynomial(rp_stirling_row(n + r.total(), r)));
}

BellTildePolynomial bell_tilde(int n, const RestrictionVector& r) {
  if (n < 0) throw std::domain_error("bell_tilde: negative index");
  std::vector<ExactInt> row = rp_stirling_row(n + r.total(), r);
  // Drop the first |prefix| entries: k + |r| = (k + |prefix|) + r_p.
  std::vector<ExactInt> coeffs(row.begin() + r.prefix_total(), row.end());
  return BellTildePolynomial(n, r, IntPolynomial(std::move(coeffs)));
}

IntPolynomial poly_P(int n, const RestrictionVector& r) {
  return detail::restricted_poly_product(n, r);
}

BellPolynomial bell_next(const BellPolynomial& b) {
  const IntPolynomial& cur = b.poly();
  IntPolynomial z_plus_r({static_cast<long>(b.r().last()), 1});
  IntPolynomial next = cur.derivative().shifted_up(1) + z_plus_r * cur;
  return BellPolynomial(b.n() + 1, b.r(), std::move(next));
}

VerificationReport verify_dobinski(int n, const RestrictionVector& r, int order) {
  int deg = n + r.prefix_total();
  if (order < deg + 1) {
    throw std::invalid_argument("verify_dobinski: order must exceed the polynomial degree");
  }
  VerificationReport report;
  report.id = IdentityId::Dobinski;
  report.params = {{"n", std::to_string(n)}, {"r", r.str()}, {"order", std::to_string(order)}};

  IntPolynomial p = poly_P(n, r);
  TruncatedSeries weighted(order);  // sum_k P_n(k; r) z^k / k!
  ExactInt kfac(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfac *= ExactInt(static_cast<long>(k));
    weighted.set_coeff(k, ExactRational(p.eval(ExactInt(static_cast<long>(k))), kfac));
  }
  TruncatedSeries minus_z(order);
  if (order >= 1) minus_z.set_coeff(1, ExactRational(-1));
  TruncatedSeries lhs = series_exp(minus_z) * weighted;

  const IntPolynomial bell = bell_poly(n, r).poly();
  report.passed = true;
  for (int k = 0; k <= order; ++k) {
    ExactRational expect = k <= deg ? ExactRational(bell.coeff(k)) : ExactRational(0);
    if (lhs.coeff(k) != expect) {
      report.passed = false;
      report.first_discrepancy =
          Discrepancy{"z^" + std::to_string(k), lhs.coeff(k).str(), expect.str()};
      break;
    }
  }
  return report;
}

}  // namespace rpbell
