#include "rpbell/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpbell {

namespace {

// Dense rational polynomial, local to the Sturm machinery.
using QPoly = std::vector<ExactRational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly from_int_poly(const IntPolynomial& p) {
  QPoly q;
  q.reserve(static_cast<size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) q.emplace_back(p.coeff(i));
  return q;
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * ExactRational(static_cast<long>(i)));
  }
  trim(d);
  return d;
}

ExactRational eval(const QPoly& p, const ExactRational& x) {
  ExactRational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Scale by a positive rational so the coefficients become integers with
// gcd 1; positive scaling keeps every Sturm sign intact and the chain
// coefficients small.
void normalize_positive(QPoly& p) {
  trim(p);
  if (p.empty()) return;
  ExactInt den_lcm(1);
  for (const auto& c : p) {
    ExactInt d = c.denominator();
    ExactInt g = ExactInt::gcd(den_lcm, d);
    ExactRational quotient(d, g);
    den_lcm = den_lcm * quotient.numerator();
  }
  ExactInt content(0);
  for (auto& c : p) {
    c *= ExactRational(den_lcm);
    content = ExactInt::gcd(content, c.numerator());
  }
  if (content > ExactInt(1)) {
    for (auto& c : p) c *= ExactRational(ExactInt(1), content);
  }
}

// Remainder of a by b, b nonzero.
QPoly remainder(QPoly a, const QPoly& b) {
  trim(a);
  while (degree(a) >= degree(b) && !a.empty()) {
    ExactRational factor = a.back() / b.back();
    int shift = degree(a) - degree(b);
    for (size_t i = 0; i < b.size(); ++i) {
      a[static_cast<size_t>(shift) + i] -= factor * b[i];
    }
    trim(a);
  }
  return a;
}

QPoly gcd_poly(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = remainder(a, b);
    normalize_positive(r);
    a = std::move(b);
    b = std::move(r);
  }
  normalize_positive(a);
  return a;
}

// Exact quotient a / b when b divides a.
QPoly quotient_exact(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, ExactRational(0));
  while (degree(a) >= degree(b) && !a.empty()) {
    ExactRational factor = a.back() / b.back();
    int shift = degree(a) - degree(b);
    q[static_cast<size_t>(shift)] = factor;
    for (size_t i = 0; i < b.size(); ++i) {
      a[static_cast<size_t>(shift) + i] -= factor * b[i];
    }
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("quotient_exact: division was not exact");
  return q;
}

int sign_changes(const std::vector<QPoly>& chain, const ExactRational& x) {
  int changes = 0;
  int prev = 0;
  for (const QPoly& f : chain) {
    int s = eval(f, x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

RootCertificate certify_real_negative_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("certify_real_negative_roots: zero polynomial");

  RootCertificate cert;
  cert.degree = p.degree();

  QPoly f = from_int_poly(p);
  QPoly g = gcd_poly(f, derivative(f));
  QPoly squarefree = quotient_exact(f, g);
  normalize_positive(squarefree);
  cert.squarefree_degree = degree(squarefree);

  if (cert.squarefree_degree == 0) {
    // Nonzero constant: no roots at all, vacuously all negative.
    cert.distinct_real_negative_roots = 0;
    cert.all_real_negative = true;
    return cert;
  }

  // A root at z = 0 appears at most once in the square-free part; strip it
  // so the Sturm endpoints are never roots.
  bool zero_is_root = squarefree.front().is_zero();
  QPoly core = squarefree;
  if (zero_is_root) core.erase(core.begin());
  trim(core);

  if (degree(core) >= 1) {
    // Cauchy bound from the original coefficients: every root of p (hence
    // of core) has |z| < 1 + max |c_i| / |c_lead|.
    ExactRational lead(p.coeff(p.degree()).abs());
    ExactRational max_ratio(0);
    for (int i = 0; i < p.degree(); ++i) {
      ExactRational ratio = ExactRational(p.coeff(i).abs()) / lead;
      if (ratio > max_ratio) max_ratio = ratio;
    }
    ExactRational bound = ExactRational(1) + max_ratio;

    std::vector<QPoly> chain;
    chain.push_back(core);
    chain.push_back(derivative(core));
    normalize_positive(chain.back());
    while (!chain.back().empty() && degree(chain.back()) >= 1) {
      QPoly r = remainder(chain[chain.size() - 2], chain.back());
      for (auto& c : r) c = -c;
      normalize_positive(r);
      if (r.empty()) break;
      chain.push_back(std::move(r));
    }
    cert.distinct_real_negative_roots = sign_changes(chain, -bound) -
                                        sign_changes(chain, ExactRational(0));
  } else {
    cert.distinct_real_negative_roots = 0;
  }

  cert.all_real_negative =
      !zero_is_root && cert.distinct_real_negative_roots == cert.squarefree_degree;
  return cert;
}

bool check_newton_inequality(const std::vector<ExactInt>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  for (int i = 1; i <= n - 1; ++i) {
    // a_i^2 * i * (n - i) >= (i + 1)(n - i + 1) * a_{i+1} * a_{i-1}, the
    // inequality cleared of denominators.
    ExactInt lhs = coeffs[static_cast<size_t>(i)] * coeffs[static_cast<size_t>(i)] *
                   ExactInt(static_cast<long>(i)) * ExactInt(static_cast<long>(n - i));
    ExactInt rhs = ExactInt(static_cast<long>(i + 1)) * ExactInt(static_cast<long>(n - i + 1)) *
                   coeffs[static_cast<size_t>(i + 1)] * coeffs[static_cast<size_t>(i - 1)];
    if (lhs < rhs) return false;
  }
  return true;
}

bool check_strong_log_concavity(const std::vector<ExactInt>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("check_strong_log_concavity: empty sequence");
  for (const ExactInt& c : coeffs) {
    if (c.sign() < 0) throw std::domain_error("check_strong_log_concavity: negative entry");
  }
  for (size_t i = 1; i + 1 < coeffs.size(); ++i) {
    ExactInt neighbors = coeffs[i - 1] * coeffs[i + 1];
    if (neighbors.is_zero()) continue;
    if (!(coeffs[i] * coeffs[i] > neighbors)) return false;
  }
  return true;
}

MaxIndexReport max_index_report(int n, const RestrictionVector& r) {
  BellPolynomial b = bell_poly(n, r);
  const std::vector<ExactInt>& row = b.poly().coeffs();

  int max_index = 0;
  for (size_t k = 1; k < row.size(); ++k) {
    if (row[k] >= row[static_cast<size_t>(max_index)]) max_index = static_cast<int>(k);
  }

  ExactInt numer = bell_poly(n + 1, r).value_at_one();
  ExactInt denom = b.value_at_one();
  ExactRational center =
      ExactRational(numer, denom) - ExactRational(static_cast<long>(r.last() + 1));

  ExactRational gap = (ExactRational(static_cast<long>(max_index)) - center).abs();
  return MaxIndexReport{n,
                        r,
                        max_index,
                        center,
                        gap < ExactRational(1),
                        gap == ExactRational(1)};
}

}  // namespace rpbell
