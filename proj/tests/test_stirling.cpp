#include <doctest.h>

#include "rpbell/oracle.hpp"
#include "rpbell/polynomial.hpp"
#include "rpbell/stirling.hpp"

using rpbell::ExactInt;
using rpbell::IntPolynomial;
using rpbell::PartitionSpec;

namespace {

ExactInt oracle_count(int n, std::vector<int> sizes, int k) {
  return rpbell::count_partitions(PartitionSpec{n, std::move(sizes), k});
}

// u(u+1)...(u+n-1), the independent route to the unsigned first kind.
IntPolynomial rising_factorial(const ExactInt& shift, int n) {
  IntPolynomial prod = IntPolynomial::constant(ExactInt(1));
  for (int i = 0; i < n; ++i) {
    prod = prod * (IntPolynomial{0, 1} + IntPolynomial::constant(shift + ExactInt(i)));
  }
  return prod;
}

}  // namespace

TEST_SUITE("stirling") {

TEST_CASE("second kind against the partition oracle") {
  CHECK(rpbell::stirling2(4, 2) == oracle_count(4, {}, 2));
  CHECK(rpbell::stirling2(4, 2) == ExactInt(7));
  CHECK(rpbell::stirling2(0, 0) == ExactInt(1));
  CHECK(rpbell::stirling2(3, 5) == ExactInt(0));
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(rpbell::stirling2(n, k) == oracle_count(n, {}, k));
  }
}

TEST_CASE("unsigned first kind from the rising factorial") {
  IntPolynomial rf = rising_factorial(ExactInt(0), 4);  // u(u+1)(u+2)(u+3)
  CHECK(rpbell::stirling1_unsigned(4, 2) == rf.coeff(2));
  CHECK(rpbell::stirling1_unsigned(4, 2) == ExactInt(11));
  for (int n = 0; n <= 12; ++n) CHECK(rpbell::stirling1_unsigned(n, n) == ExactInt(1));
  CHECK(rpbell::stirling1_unsigned(3, 0) == ExactInt(0));
  for (int n = 0; n <= 8; ++n) {
    IntPolynomial p = rising_factorial(ExactInt(0), n);
    for (int k = 0; k <= n; ++k) CHECK(rpbell::stirling1_unsigned(n, k) == p.coeff(k));
  }
}

TEST_CASE("r-Stirling second kind") {
  CHECK(rpbell::r_stirling2(3, 2, 2) == oracle_count(3, {2}, 2));
  CHECK(rpbell::r_stirling2(3, 2, 2) == ExactInt(2));
  CHECK(rpbell::r_stirling2(2, 2, 2) == ExactInt(1));
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(rpbell::r_stirling2(n, k, 0) == rpbell::stirling2(n, k));
      if (n >= 1) CHECK(rpbell::r_stirling2(n, k, 1) == rpbell::stirling2(n, k));
    }
  }
  for (int n = 2; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(rpbell::r_stirling2(n, k, 2) == oracle_count(n, {2}, k));
    }
  }
  CHECK_THROWS_AS(rpbell::r_stirling2(1, 1, 2), std::domain_error);
}

TEST_CASE("r-Stirling first kind") {
  CHECK(rpbell::r_stirling1_unsigned(4, 3, 3) == ExactInt(3));
  for (int r = 0; r <= 4; ++r) {
    for (int n = r; n <= 8; ++n) CHECK(rpbell::r_stirling1_unsigned(n, n, r) == ExactInt(1));
  }
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(rpbell::r_stirling1_unsigned(n, k, 0) == rpbell::stirling1_unsigned(n, k));
    }
  }
  CHECK_THROWS_AS(rpbell::r_stirling1_unsigned(2, 1, 3), std::domain_error);
}

TEST_CASE("rising factorial expansion over the r-triangle") {
  // (z + r)(z + r + 1)...(z + r + n - 1) = sum_j [n + r brack j + r]_r z^j.
  for (int r = 0; r <= 4; ++r) {
    for (int n = 0; n <= 8; ++n) {
      IntPolynomial lhs = rising_factorial(ExactInt(r), n);
      IntPolynomial rhs;
      for (int j = 0; j <= n; ++j) {
        rhs += IntPolynomial::monomial(rpbell::r_stirling1_unsigned(n + r, j + r, r), j);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("entries outside the triangle are zero") {
  CHECK(rpbell::stirling2(5, 9) == ExactInt(0));
  CHECK(rpbell::stirling2(5, -1) == ExactInt(0));
  CHECK(rpbell::r_stirling2(5, 7, 2) == ExactInt(0));
  CHECK(rpbell::r_stirling2(5, 1, 2) == ExactInt(0));  // fewer blocks than pinned elements
}

TEST_CASE("row sums are Bell numbers") {
  ExactInt b5(0);
  for (int k = 0; k <= 5; ++k) b5 += rpbell::stirling2(5, k);
  CHECK(b5 == ExactInt(52));
  CHECK(rpbell::r_bell_number(5, 0) == ExactInt(52));
  CHECK(rpbell::r_bell_number(3, 0) == ExactInt(5));
}

TEST_CASE("classical Bell polynomial rows") {
  CHECK(rpbell::classical_bell_polynomial(5) == IntPolynomial{0, 1, 15, 25, 10, 1});
  CHECK(rpbell::classical_bell_polynomial(0) == IntPolynomial{1});
  CHECK(rpbell::r_bell_polynomial(1, 3) == IntPolynomial{3, 1});
}

}  // TEST_SUITE
