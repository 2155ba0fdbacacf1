#include <doctest.h>

#include "rpbell/bell.hpp"
#include "rpbell/identities.hpp"
#include "rpbell/polynomial.hpp"
#include "rpbell/stirling.hpp"

using rpbell::ExactRational;
using rpbell::IntPolynomial;
using rpbell::RestrictionVector;
using rpbell::SuiteOptions;

TEST_SUITE("identities") {

TEST_CASE("basis change (T3)") {
  CHECK(rpbell::verify_t3(0, {2, 2}, 0).passed);
  // a(1) = (0, 1): a pure index shift.
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 4; ++n) CHECK(rpbell::verify_t3(n, {1, k}, 0).passed);
  }
  CHECK(rpbell::verify_t3(1, {1, 2, 2}, 1).passed);
  CHECK(rpbell::verify_t3(2, {1, 2, 2}, 2).passed);
  CHECK_THROWS_AS(rpbell::verify_t3(0, {2}, 1), std::invalid_argument);
  // Reports carry the split in their id.
  CHECK(rpbell::verify_t3(0, {1, 2}, 0).id == rpbell::IdentityId::T3a);
  CHECK(rpbell::verify_t3(0, {1, 2}, 1).id == rpbell::IdentityId::T3b);
}

TEST_CASE("reduction identity (C1)") {
  auto report = rpbell::verify_c1(0, 0, {2, 2});
  CHECK(report.passed);
  for (const auto& r : {RestrictionVector{2, 3}, RestrictionVector{1, 2, 2}}) {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= 6; ++k) CHECK(rpbell::verify_c1(n, k, r).passed);
    }
  }
}

TEST_CASE("exponential generating function (T4)") {
  CHECK(rpbell::verify_t4_egf(0, {1}, ExactRational(1), 6).passed);
  CHECK(rpbell::verify_t4_egf(1, {2}, ExactRational(1, 2), 8).passed);
  CHECK(rpbell::verify_t4_egf(2, {2, 2}, ExactRational(2), 6).passed);
  CHECK(rpbell::verify_t4_derivative(0, {1}, ExactRational(1), 6).passed);
  CHECK(rpbell::verify_t4_derivative(1, {2}, ExactRational(1, 2), 8).passed);
  CHECK(rpbell::verify_t4_derivative(2, {2, 2}, ExactRational(2), 6).passed);
  CHECK(rpbell::verify_t4_egf(1, {1, 2}, ExactRational(-1), 8).passed);
  CHECK(rpbell::verify_t4_derivative(1, {1, 2}, ExactRational(-1), 8).passed);
}

TEST_CASE("generalized recurrences (T6)") {
  for (int r = 1; r <= 4; ++r) CHECK(rpbell::verify_t6c(1, 0, {r}).passed);
  for (int m = 0; m <= 4; ++m) CHECK(rpbell::verify_t6a(0, m, {2, 2}).passed);
  for (const auto& r : {RestrictionVector{2}, RestrictionVector{1, 2}, RestrictionVector{2, 2}}) {
    for (int n = 0; n <= 5; ++n) {
      for (int m = 0; m <= 5; ++m) {
        for (const auto& report : rpbell::verify_t6(n, m, r)) CHECK(report.passed);
      }
    }
  }
}

TEST_CASE("Stirling-number consequences of T6") {
  CHECK(rpbell::verify_cor_t6_convolution(0, 3, 2, {2, 2}).passed);
  for (int m = 0; m <= 4; ++m) CHECK(rpbell::verify_cor_t6_vanishing(2, m, 1, {2}).passed);
  CHECK(rpbell::verify_cor_t6_shift(1, 1, 0, {2, 2}).passed);
  CHECK_THROWS_AS(rpbell::verify_cor_t6_vanishing(1, 0, 1, {2}), std::invalid_argument);
}

TEST_CASE("Spivey-style recurrence") {
  // n = m = 1, r = 0: only the j = 1 terms survive and give z + z^2.
  auto report = rpbell::verify_spivey(1, 1, 0);
  CHECK(report.passed);
  CHECK(rpbell::classical_bell_polynomial(2) == IntPolynomial{0, 1, 1});
  for (int m = 0; m <= 5; ++m) {
    for (int r = 0; r <= 3; ++r) CHECK(rpbell::verify_spivey(0, m, r).passed);
  }
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (int r = 0; r <= 3; ++r) CHECK(rpbell::verify_spivey(n, m, r).passed);
    }
  }
}

TEST_CASE("Carlitz identities") {
  CHECK(rpbell::verify_carlitz1(0, 0, 1).passed);
  CHECK(rpbell::verify_carlitz1(2, 1, 2).passed);
  CHECK(rpbell::verify_carlitz2(0, 0, 1).passed);
  for (int n = 0; n <= 5; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (int r = 0; r <= 3; ++r) CHECK(rpbell::verify_carlitz1(n, m, r).passed);
    }
    for (int s = 0; s <= 3; ++s) {
      for (int r = 0; r <= 3; ++r) CHECK(rpbell::verify_carlitz2(n, s, r).passed);
    }
  }
}

TEST_CASE("ordinary generating functions") {
  auto geometric = rpbell::verify_ogf_r(0, 1, 10);
  CHECK(geometric.passed);
  CHECK(rpbell::verify_ogf_r(1, 1, 10).passed);  // coefficients 2^n - 1
  for (int k = 0; k <= 4; ++k) {
    for (int r = 0; r <= 3; ++r) CHECK(rpbell::verify_ogf_r(k, r, 12).passed);
  }
  for (const auto& r : {RestrictionVector{2}, RestrictionVector{1, 2}, RestrictionVector{2, 2}}) {
    for (int k = 0; k <= 3; ++k) CHECK(rpbell::verify_ogf_rp(k, r, 12).passed);
    for (const auto& z : {ExactRational(0), ExactRational(1), ExactRational(1, 2)}) {
      CHECK(rpbell::verify_ogf_tilde(z, r, 8).passed);
    }
  }
}

TEST_CASE("symbolic derivative identities (Eq2, Eq8)") {
  for (int m = 0; m <= 4; ++m) CHECK(rpbell::verify_eq8(m, 0, {2}).passed);
  CHECK(rpbell::verify_eq8(1, 1, {2}).passed);
  CHECK(rpbell::verify_eq2(2, {2, 2}).passed);
  for (const auto& r : {RestrictionVector{1}, RestrictionVector{3}, RestrictionVector{1, 2},
                        RestrictionVector{2, 2}, RestrictionVector{1, 2, 2}}) {
    for (int n = 0; n <= 4; ++n) CHECK(rpbell::verify_eq2(n, r).passed);
    for (int j = 0; j <= 3; ++j) CHECK(rpbell::verify_eq8(2, j, r).passed);
  }
  CHECK_THROWS_AS(rpbell::verify_eq8(1, 7, {2}), std::invalid_argument);
}

TEST_CASE("restriction grid") {
  auto grid = rpbell::restriction_grid(5);
  CHECK(grid.size() == 15);
  CHECK(rpbell::restriction_grid(2).size() == 3);  // (1), (2), (1,1)
  for (const auto& r : grid) {
    CHECK(r.total() <= 5);
    CHECK(r.p() <= 3);
  }
}

TEST_CASE("suite runner") {
  SuiteOptions small{2, 2, 3, 0};
  auto reports = rpbell::run_suite("all", small);
  CHECK(reports.size() > 100);
  for (const auto& report : reports) CHECK(report.passed);
  CHECK_THROWS_AS(rpbell::run_suite("bogus", small), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  auto a = rpbell::verify_t3(2, {1, 2}, 0);
  auto b = rpbell::verify_t3(2, {1, 2}, 0);
  CHECK(a.params == b.params);
  CHECK(a.passed == b.passed);
  CHECK(a.params_str() == "n=2 r=(1,2) q=0");
}

}  // TEST_SUITE
