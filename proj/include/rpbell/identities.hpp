#pragma once

#include <string>
#include <vector>

#include "rpbell/exact.hpp"
#include "rpbell/report.hpp"
#include "rpbell/restriction.hpp"

namespace rpbell {

// Every identity becomes an executable check at one parameter point,
// returning a structured report instead of throwing: a failed comparison
// is data, not an error.

// B_n(z; r) in the basis {B_{n+k}(z; suffix)}. With q = 0 the suffix is
// the plain last part; with q > 0 the vector splits at p = #parts - q and
// the whole tail (r_p, ..., r_{p+q}) serves as the new restriction vector.
VerificationReport verify_t3(int n, const RestrictionVector& r, int q);

// Reduction of one restricted Stirling number to plain r-Stirling numbers
// through the connection coefficients; n, k in the offset indexing of the
// Bell rows.
VerificationReport verify_c1(int n, int k, const RestrictionVector& r);

// Exponential generating function of (B_{n+m})_n at a fixed rational z:
// against the closed product form (T4a) and against the derivative form
// through the connection coefficients (T4b).
VerificationReport verify_t4_egf(int m, const RestrictionVector& r, const ExactRational& z,
                                 int order);
VerificationReport verify_t4_derivative(int m, const RestrictionVector& r,
                                        const ExactRational& z, int order);

// The three generalized recurrences for B_{n+m}(z; r).
VerificationReport verify_t6a(int n, int m, const RestrictionVector& r);
VerificationReport verify_t6b(int n, int m, const RestrictionVector& r);
VerificationReport verify_t6c(int n, int m, const RestrictionVector& r);
std::vector<VerificationReport> verify_t6(int n, int m, const RestrictionVector& r);

// The three Stirling-number consequences: the convolution, the alternating
// shift identity, and the exact-zero sum for k < n.
VerificationReport verify_cor_t6_convolution(int n, int m, int k, const RestrictionVector& r);
VerificationReport verify_cor_t6_shift(int n, int m, int k, const RestrictionVector& r);
VerificationReport verify_cor_t6_vanishing(int n, int m, int k, const RestrictionVector& r);

// The Spivey-style double-sum recurrence for r-Bell polynomials (classical
// for r = 0), with the 0^0 = 1 convention in the j = 0, k = n term.
VerificationReport verify_spivey(int n, int m, int r);

// Carlitz's two identities for r-Bell numbers.
VerificationReport verify_carlitz1(int n, int m, int r);
VerificationReport verify_carlitz2(int n, int s, int r);

// Ordinary generating functions as truncated series: the plain r-Stirling
// column (OGF_r), the restricted column (OGF_rp), and the tilde-polynomial
// series at a rational z (OGF_tilde).
VerificationReport verify_ogf_r(int k, int r, int order);
VerificationReport verify_ogf_rp(int k, const RestrictionVector& r, int order);
VerificationReport verify_ogf_tilde(const ExactRational& z, const RestrictionVector& r,
                                    int order);

// The two symbolic-derivative identities, with d/dz(e^z Q) = e^z (Q + Q')
// applied repeatedly: building B_n(z; r) from the next-shorter vector
// (Eq2) and raising the last part by j (Eq8).
VerificationReport verify_eq2(int n, const RestrictionVector& r);
VerificationReport verify_eq8(int m, int j, const RestrictionVector& r);

// All sorted restriction vectors with at most max_parts parts and total
// at most max_total.
std::vector<RestrictionVector> restriction_grid(int max_total, int max_parts = 3);

struct SuiteOptions {
  int max_n = 4;
  int max_m = 4;
  int max_r = 3;
  int order = 0;  // 0 = per-suite default
};

// Suites: t3, c1, t4, t6, cor-t6, spivey, carlitz, ogf, dobinski,
// eq2-eq8, all. Unknown names throw std::invalid_argument.
std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options);
std::vector<std::string> suite_names();

}  // namespace rpbell
