#include "rpbell/identities.hpp"

#include <algorithm>
#include <stdexcept>

#include "rpbell/bell.hpp"
#include "rpbell/series.hpp"
#include "rpbell/stirling.hpp"

namespace rpbell {

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

VerificationReport compare_polys(IdentityId id, Params params, const IntPolynomial& lhs,
                                 const IntPolynomial& rhs) {
  VerificationReport report{id, std::move(params), true, std::nullopt};
  int top = std::max(lhs.degree(), rhs.degree());
  for (int i = 0; i <= top; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      report.passed = false;
      report.first_discrepancy =
          Discrepancy{"z^" + std::to_string(i), lhs.coeff(i).str(), rhs.coeff(i).str()};
      break;
    }
  }
  return report;
}

VerificationReport compare_series(IdentityId id, Params params, const TruncatedSeries& lhs,
                                  const TruncatedSeries& rhs) {
  VerificationReport report{id, std::move(params), true, std::nullopt};
  int top = std::min(lhs.order(), rhs.order());
  for (int i = 0; i <= top; ++i) {
    if (lhs.coeff(i) != rhs.coeff(i)) {
      report.passed = false;
      report.first_discrepancy =
          Discrepancy{"t^" + std::to_string(i), lhs.coeff(i).str(), rhs.coeff(i).str()};
      break;
    }
  }
  return report;
}

VerificationReport compare_values(IdentityId id, Params params, const ExactInt& lhs,
                                  const ExactInt& rhs) {
  VerificationReport report{id, std::move(params), true, std::nullopt};
  if (lhs != rhs) {
    report.passed = false;
    report.first_discrepancy = Discrepancy{"value", lhs.str(), rhs.str()};
  }
  return report;
}

// exp(z (e^t - 1) + r_p t) as a truncated series in t, z fixed rational.
TruncatedSeries egf_kernel(const ExactRational& z, int last_part, int order) {
  TruncatedSeries arg(order);
  ExactInt kfac(1);
  for (int k = 1; k <= order; ++k) {
    kfac *= ExactInt(static_cast<long>(k));
    ExactRational c = z / ExactRational(kfac);
    if (k == 1) c += ExactRational(static_cast<long>(last_part));
    arg.set_coeff(k, c);
  }
  return series_exp(arg);
}

// sum_{n} B_{n+m}(z; r) t^n / n!, the left side shared by both T4 forms.
TruncatedSeries bell_egf_lhs(int m, const RestrictionVector& r, const ExactRational& z,
                             int order) {
  TruncatedSeries lhs(order);
  ExactInt nfac(1);
  for (int n = 0; n <= order; ++n) {
    if (n > 0) nfac *= ExactInt(static_cast<long>(n));
    lhs.set_coeff(n, bell_poly(n + m, r).poly().eval(z) / ExactRational(nfac));
  }
  return lhs;
}

IntPolynomial one_plus_derivative(const IntPolynomial& p) { return p + p.derivative(); }

}  // namespace

VerificationReport verify_t3(int n, const RestrictionVector& r, int q) {
  if (q < 0 || q >= r.p()) throw std::invalid_argument("verify_t3: q must be in [0, p)");
  int split = r.p() - q;  // the part index (1-based) that starts the suffix
  const std::vector<int>& parts = r.parts();
  std::vector<int> head(parts.begin(), parts.begin() + split - 1);
  RestrictionVector suffix(std::vector<int>(parts.begin() + split - 1, parts.end()));

  ACoeffs a = a_coeffs(head);
  IntPolynomial rhs;
  for (int k = 0; k < a.size(); ++k) {
    if (a.at(k).is_zero()) continue;
    rhs += bell_poly(n + k, suffix).poly() * a.at(k);
  }
  Params params{{"n", std::to_string(n)}, {"r", r.str()}, {"q", std::to_string(q)}};
  return compare_polys(q == 0 ? IdentityId::T3a : IdentityId::T3b, std::move(params),
                       bell_poly(n, r).poly(), rhs);
}

VerificationReport verify_c1(int n, int k, const RestrictionVector& r) {
  ExactInt lhs = rp_stirling2(n + r.total(), k + r.last(), r);
  ACoeffs a = a_coeffs(r.prefix());
  ExactInt rhs(0);
  for (int j = 0; j < a.size(); ++j) {
    if (a.at(j).is_zero()) continue;
    rhs += a.at(j) * r_stirling2(n + j + r.last(), k + r.last(), r.last());
  }
  Params params{{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"r", r.str()}};
  return compare_values(IdentityId::C1, std::move(params), lhs, rhs);
}

VerificationReport verify_t4_egf(int m, const RestrictionVector& r, const ExactRational& z,
                                 int order) {
  if (order < 1) throw std::invalid_argument("verify_t4: order must be positive");
  TruncatedSeries lhs = bell_egf_lhs(m, r, z, order);

  // B_m(z e^t; r) * exp(z(e^t - 1) + r_p t).
  TruncatedSeries z_exp_t(order);
  ExactInt kfac(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) kfac *= ExactInt(static_cast<long>(k));
    z_exp_t.set_coeff(k, z / ExactRational(kfac));
  }
  TruncatedSeries rhs =
      poly_compose_series(bell_poly(m, r).poly(), z_exp_t) * egf_kernel(z, r.last(), order);

  Params params{{"m", std::to_string(m)},
                {"r", r.str()},
                {"z", z.str()},
                {"order", std::to_string(order)}};
  return compare_series(IdentityId::T4a, std::move(params), lhs, rhs);
}

VerificationReport verify_t4_derivative(int m, const RestrictionVector& r,
                                        const ExactRational& z, int order) {
  if (order < 1) throw std::invalid_argument("verify_t4: order must be positive");
  TruncatedSeries lhs = bell_egf_lhs(m, r, z, order);

  // sum_k a_k(prefix) d^{m+k}/dt^{m+k} exp(z(e^t - 1) + r_p t); the kernel
  // is expanded high enough that every derivative still covers `order`.
  ACoeffs a = a_coeffs(r.prefix());
  TruncatedSeries kernel = egf_kernel(z, r.last(), order + m + a.size() - 1);
  TruncatedSeries rhs(order);
  for (int k = 0; k < a.size(); ++k) {
    TruncatedSeries term = kernel;
    for (int d = 0; d < m + k; ++d) term = term.derivative();
    rhs += term.truncated(order) * ExactRational(a.at(k));
  }

  Params params{{"m", std::to_string(m)},
                {"r", r.str()},
                {"z", z.str()},
                {"order", std::to_string(order)}};
  return compare_series(IdentityId::T4b, std::move(params), lhs, rhs);
}

VerificationReport verify_t6a(int n, int m, const RestrictionVector& r) {
  IntPolynomial rhs;
  for (int j = 0; j <= n; ++j) {
    ExactInt s = r_stirling2(n + r.last(), j + r.last(), r.last());
    if (s.is_zero()) continue;
    rhs += (bell_poly(m, r.incremented_last(j)).poly() * s).shifted_up(j);
  }
  Params params{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"r", r.str()}};
  return compare_polys(IdentityId::T6a, std::move(params), bell_poly(n + m, r).poly(), rhs);
}

VerificationReport verify_t6b(int n, int m, const RestrictionVector& r) {
  ACoeffs a = a_coeffs(r.prefix());
  IntPolynomial rhs;
  for (int i = 0; i < a.size(); ++i) {
    if (a.at(i).is_zero()) continue;
    for (int j = 0; j <= n; ++j) {
      ExactInt s = r_stirling2(n + r.last(), j + r.last(), r.last());
      if (s.is_zero()) continue;
      rhs += (r_bell_polynomial(m + i, r.last() + j) * (s * a.at(i))).shifted_up(j);
    }
  }
  Params params{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"r", r.str()}};
  return compare_polys(IdentityId::T6b, std::move(params), bell_poly(n + m, r).poly(), rhs);
}

VerificationReport verify_t6c(int n, int m, const RestrictionVector& r) {
  IntPolynomial lhs = bell_poly(m, r.incremented_last(n)).poly().shifted_up(n);
  IntPolynomial rhs;
  for (int j = 0; j <= n; ++j) {
    ExactInt c = r_stirling1_unsigned(n + r.last(), j + r.last(), r.last());
    if (c.is_zero()) continue;
    if ((n - j) % 2 != 0) c = -c;
    rhs += bell_poly(m + j, r).poly() * c;
  }
  Params params{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"r", r.str()}};
  return compare_polys(IdentityId::T6c, std::move(params), lhs, rhs);
}

std::vector<VerificationReport> verify_t6(int n, int m, const RestrictionVector& r) {
  return {verify_t6a(n, m, r), verify_t6b(n, m, r), verify_t6c(n, m, r)};
}

VerificationReport verify_cor_t6_convolution(int n, int m, int k, const RestrictionVector& r) {
  ExactInt lhs(0);
  for (int i = 0; i <= k; ++i) {
    ExactInt left = rp_stirling2(m + r.total(), i + r.last(), r);
    if (left.is_zero()) continue;
    lhs += left * r_stirling2(n + r.last(), k - i + r.last(), r.last());
  }
  ExactInt rhs = rp_stirling2(n + m + r.total(), k + r.last(), r);
  Params params{{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"k", std::to_string(k)},
                {"r", r.str()}};
  return compare_values(IdentityId::CorT6_1, std::move(params), lhs, rhs);
}

VerificationReport verify_cor_t6_shift(int n, int m, int k, const RestrictionVector& r) {
  ExactInt lhs(0);
  for (int j = 0; j <= n; ++j) {
    ExactInt c = r_stirling1_unsigned(n + r.last(), j + r.last(), r.last());
    if (c.is_zero()) continue;
    if ((n - j) % 2 != 0) c = -c;
    lhs += rp_stirling2(m + j + r.total(), k + n + r.last(), r) * c;
  }
  ExactInt rhs = rp_stirling2(m + r.total() + n, k + r.last() + n, r.incremented_last(n));
  Params params{{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"k", std::to_string(k)},
                {"r", r.str()}};
  return compare_values(IdentityId::CorT6_2, std::move(params), lhs, rhs);
}

VerificationReport verify_cor_t6_vanishing(int n, int m, int k, const RestrictionVector& r) {
  if (k >= n) throw std::invalid_argument("verify_cor_t6_vanishing: requires k < n");
  ExactInt lhs(0);
  for (int j = 0; j <= n; ++j) {
    ExactInt c = r_stirling1_unsigned(n + r.last(), j + r.last(), r.last());
    if (c.is_zero()) continue;
    if ((n - j) % 2 != 0) c = -c;
    lhs += rp_stirling2(m + j + r.total(), k + r.last(), r) * c;
  }
  Params params{{"n", std::to_string(n)},
                {"m", std::to_string(m)},
                {"k", std::to_string(k)},
                {"r", r.str()}};
  return compare_values(IdentityId::CorT6_3, std::move(params), lhs, ExactInt(0));
}

VerificationReport verify_spivey(int n, int m, int r) {
  if (r < 0) throw std::invalid_argument("verify_spivey: negative r");
  IntPolynomial lhs = r_bell_polynomial(n + m, r);
  IntPolynomial rhs;
  for (int k = 0; k <= n; ++k) {
    const IntPolynomial bell_k = r_bell_polynomial(k, r);
    for (int j = 0; j <= m; ++j) {
      ExactInt c = r_stirling2(m + r, j + r, r) * ExactInt::binomial(n, k) *
                   ExactInt::pow(ExactInt(static_cast<long>(j)), static_cast<unsigned>(n - k));
      if (c.is_zero()) continue;
      rhs += (bell_k * c).shifted_up(j);
    }
  }
  Params params{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"r", std::to_string(r)}};
  return compare_polys(r == 0 ? IdentityId::Spivey : IdentityId::SpiveyR, std::move(params),
                       lhs, rhs);
}

VerificationReport verify_carlitz1(int n, int m, int r) {
  ExactInt lhs = r_bell_number(n + m, r);
  ExactInt rhs(0);
  for (int k = 0; k <= m; ++k) {
    rhs += r_stirling2(m + r, k + r, r) * r_bell_number(n, k + r);
  }
  Params params{{"n", std::to_string(n)}, {"m", std::to_string(m)}, {"r", std::to_string(r)}};
  return compare_values(IdentityId::Carlitz1, std::move(params), lhs, rhs);
}

VerificationReport verify_carlitz2(int n, int s, int r) {
  ExactInt lhs = r_bell_number(n, r + s);
  ExactInt rhs(0);
  for (int k = 0; k <= s; ++k) {
    ExactInt c = r_stirling1_unsigned(s + r, k + r, r);
    if (c.is_zero()) continue;
    if ((s - k) % 2 != 0) c = -c;
    rhs += c * r_bell_number(n + k, r);
  }
  Params params{{"n", std::to_string(n)}, {"s", std::to_string(s)}, {"r", std::to_string(r)}};
  return compare_values(IdentityId::Carlitz2, std::move(params), lhs, rhs);
}

VerificationReport verify_ogf_r(int k, int r, int order) {
  if (order < k) throw std::invalid_argument("verify_ogf_r: order must cover k");
  TruncatedSeries lhs(order);
  for (int n = k; n <= order; ++n) {
    lhs.set_coeff(n, ExactRational(r_stirling2(n + r, k + r, r)));
  }
  IntPolynomial denom = IntPolynomial::constant(ExactInt(1));
  for (int j = 0; j <= k; ++j) {
    denom = denom * IntPolynomial({1, static_cast<long>(-(r + j))});
  }
  TruncatedSeries rhs =
      series_inverse(TruncatedSeries::from_poly(denom, order)).shifted_up(k).truncated(order);
  Params params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"order", std::to_string(order)}};
  return compare_series(IdentityId::OGF_r, std::move(params), lhs, rhs);
}

namespace {

// The Laurent prefactor t^|prefix| * prod_i (1/t falling r_i) collapses to
// the honest polynomial prod_i prod_{l < r_i} (1 - l t).
IntPolynomial ogf_prefactor(const RestrictionVector& r) {
  IntPolynomial pref = IntPolynomial::constant(ExactInt(1));
  for (int part : r.prefix()) {
    for (int l = 1; l < part; ++l) {
      pref = pref * IntPolynomial({1, static_cast<long>(-l)});
    }
  }
  return pref;
}

TruncatedSeries reciprocal_column(int top_j, int last_part, int order) {
  IntPolynomial denom = IntPolynomial::constant(ExactInt(1));
  for (int j = 0; j <= top_j; ++j) {
    denom = denom * IntPolynomial({1, static_cast<long>(-(last_part + j))});
  }
  return series_inverse(TruncatedSeries::from_poly(denom, order));
}

}  // namespace

VerificationReport verify_ogf_rp(int k, const RestrictionVector& r, int order) {
  if (order < k) throw std::invalid_argument("verify_ogf_rp: order must cover k");
  TruncatedSeries lhs(order);
  for (int n = k; n <= order; ++n) {
    lhs.set_coeff(n, ExactRational(rp_stirling2(n + r.total(), k + r.total(), r)));
  }
  TruncatedSeries rhs = (TruncatedSeries::from_poly(ogf_prefactor(r), order) *
                         reciprocal_column(k + r.prefix_total(), r.last(), order))
                            .shifted_up(k)
                            .truncated(order);
  Params params{{"k", std::to_string(k)}, {"r", r.str()}, {"order", std::to_string(order)}};
  return compare_series(IdentityId::OGF_rp, std::move(params), lhs, rhs);
}

VerificationReport verify_ogf_tilde(const ExactRational& z, const RestrictionVector& r,
                                    int order) {
  if (order < 0) throw std::invalid_argument("verify_ogf_tilde: negative order");
  TruncatedSeries lhs(order);
  for (int n = 0; n <= order; ++n) {
    lhs.set_coeff(n, bell_tilde(n, r).poly().eval(z));
  }

  // After cancelling the Laurent prefactor: prefpoly * sum_{k >= 0} z^k t^k
  // / prod_{j=0}^{k+|prefix|} (1 - (r_p + j) t); terms beyond the order
  // cannot contribute.
  TruncatedSeries sum(order);
  TruncatedSeries inv = reciprocal_column(r.prefix_total(), r.last(), order);
  ExactRational z_pow(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      inv = inv * TruncatedSeries::geometric(ExactRational(static_cast<long>(r.last() + k +
                                                                             r.prefix_total())),
                                             order);
      z_pow *= z;
    }
    sum += (inv * z_pow).shifted_up(k).truncated(order);
  }
  TruncatedSeries rhs = TruncatedSeries::from_poly(ogf_prefactor(r), order) * sum;

  Params params{{"z", z.str()}, {"r", r.str()}, {"order", std::to_string(order)}};
  return compare_series(IdentityId::OGF_tilde, std::move(params), lhs, rhs);
}

VerificationReport verify_eq2(int n, const RestrictionVector& r) {
  IntPolynomial base;
  int steps = r.last();
  if (r.p() == 1) {
    base = classical_bell_polynomial(n);  // empty head: z^0 e^z B_n(z)
  } else {
    RestrictionVector head(r.prefix());
    base = bell_poly(n, head).poly().shifted_up(head.last());
  }
  for (int i = 0; i < steps; ++i) base = one_plus_derivative(base);
  Params params{{"n", std::to_string(n)}, {"r", r.str()}};
  return compare_polys(IdentityId::Eq2, std::move(params), bell_poly(n, r).poly(), base);
}

VerificationReport verify_eq8(int m, int j, const RestrictionVector& r) {
  if (j < 0 || j > 6) throw std::invalid_argument("verify_eq8: j must be in [0, 6]");
  IntPolynomial rhs = bell_poly(m, r).poly();
  for (int i = 0; i < j; ++i) rhs = one_plus_derivative(rhs);
  Params params{{"m", std::to_string(m)}, {"j", std::to_string(j)}, {"r", r.str()}};
  return compare_polys(IdentityId::Eq8, std::move(params),
                       bell_poly(m, r.incremented_last(j)).poly(), rhs);
}

std::vector<RestrictionVector> restriction_grid(int max_total, int max_parts) {
  std::vector<RestrictionVector> grid;
  std::vector<int> parts;
  auto extend = [&](auto&& self, int min_part, int remaining) -> void {
    if (!parts.empty()) grid.emplace_back(parts);
    if (static_cast<int>(parts.size()) == max_parts) return;
    for (int next = min_part; next <= remaining; ++next) {
      parts.push_back(next);
      self(self, next, remaining - next);
      parts.pop_back();
    }
  };
  extend(extend, 1, max_total);
  std::sort(grid.begin(), grid.end());
  return grid;
}

namespace {

void append(std::vector<VerificationReport>& out, VerificationReport report) {
  out.push_back(std::move(report));
}

std::vector<ExactRational> t4_z_values() {
  return {ExactRational(1), ExactRational(1, 2), ExactRational(2), ExactRational(-1)};
}

std::vector<VerificationReport> suite_t3(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int q = 0; q < r.p(); ++q) append(out, verify_t3(n, r, q));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_c1(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int k = 0; k <= n + r.prefix_total() + 1; ++k) append(out, verify_c1(n, k, r));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_t4(const SuiteOptions& o) {
  int order = o.order > 0 ? o.order : 8;
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int m = 0; m <= o.max_m; ++m) {
      for (const auto& z : t4_z_values()) {
        append(out, verify_t4_egf(m, r, z, order));
        append(out, verify_t4_derivative(m, r, z, order));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> suite_t6(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int m = 0; m <= o.max_m; ++m) {
        for (auto& report : verify_t6(n, m, r)) append(out, std::move(report));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> suite_cor_t6(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int m = 0; m <= o.max_m; ++m) {
        for (int k = 0; k <= n + m + r.prefix_total(); ++k) {
          append(out, verify_cor_t6_convolution(n, m, k, r));
        }
        for (int k = 0; k <= m + r.prefix_total(); ++k) {
          append(out, verify_cor_t6_shift(n, m, k, r));
        }
        for (int k = 0; k < n; ++k) append(out, verify_cor_t6_vanishing(n, m, k, r));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> suite_spivey(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (int r = 0; r <= o.max_r; ++r) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int m = 0; m <= o.max_m; ++m) append(out, verify_spivey(n, m, r));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_carlitz(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (int r = 0; r <= o.max_r; ++r) {
    for (int n = 0; n <= o.max_n; ++n) {
      for (int m = 0; m <= o.max_m; ++m) append(out, verify_carlitz1(n, m, r));
      for (int s = 0; s <= o.max_r; ++s) append(out, verify_carlitz2(n, s, r));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_ogf(const SuiteOptions& o) {
  int order = o.order > 0 ? o.order : 12;
  std::vector<VerificationReport> out;
  for (int r = 0; r <= o.max_r; ++r) {
    for (int k = 0; k <= 4; ++k) append(out, verify_ogf_r(k, r, order));
  }
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int k = 0; k <= 3; ++k) append(out, verify_ogf_rp(k, r, order));
    for (const auto& z : {ExactRational(0), ExactRational(1), ExactRational(1, 2),
                          ExactRational(2), ExactRational(-1)}) {
      append(out, verify_ogf_tilde(z, r, order));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_dobinski(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) {
      int deg = n + r.prefix_total();
      int order = o.order > deg ? o.order : deg + 10;
      append(out, verify_dobinski(n, r, order));
    }
  }
  return out;
}

std::vector<VerificationReport> suite_eq2_eq8(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  for (const auto& r : restriction_grid(o.max_r)) {
    for (int n = 0; n <= o.max_n; ++n) append(out, verify_eq2(n, r));
    for (int m = 0; m <= o.max_m; ++m) {
      for (int j = 0; j <= std::min(4, o.max_n); ++j) append(out, verify_eq8(m, j, r));
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"t3",     "c1",      "t4",  "t6",       "cor-t6",  "spivey",
          "carlitz", "ogf", "dobinski", "eq2-eq8", "all"};
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "t3") return suite_t3(options);
  if (name == "c1") return suite_c1(options);
  if (name == "t4") return suite_t4(options);
  if (name == "t6") return suite_t6(options);
  if (name == "cor-t6") return suite_cor_t6(options);
  if (name == "spivey") return suite_spivey(options);
  if (name == "carlitz") return suite_carlitz(options);
  if (name == "ogf") return suite_ogf(options);
  if (name == "dobinski") return suite_dobinski(options);
  if (name == "eq2-eq8") return suite_eq2_eq8(options);
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const auto& suite : suite_names()) {
      if (suite == "all") continue;
      auto part = run_suite(suite, options);
      out.insert(out.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace rpbell
