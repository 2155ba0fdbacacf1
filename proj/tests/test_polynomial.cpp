#include <doctest.h>

#include <random>

#include "rpbell/polynomial.hpp"

using rpbell::ExactInt;
using rpbell::ExactRational;
using rpbell::IntPolynomial;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<ExactInt> c;
  int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("product examples") {
  IntPolynomial one_plus_z{1, 1};
  IntPolynomial one_minus_z{1, -1};
  CHECK(one_plus_z * one_minus_z == IntPolynomial{1, 0, -1});
  CHECK(IntPolynomial{0, 1} * IntPolynomial() == IntPolynomial());
  CHECK(IntPolynomial{0, -1, 1} * IntPolynomial{-1, 1} == IntPolynomial{0, 1, -2, 1});
}

TEST_CASE("degree bookkeeping") {
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial{5}.degree() == 0);
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);  // trailing zeros trimmed
  IntPolynomial p{1, 2, 3};
  CHECK((p - p).is_zero());
  CHECK((IntPolynomial{2, 1} * IntPolynomial{3, 0, 1}).degree() == 3);
}

TEST_CASE("falling factorial polynomials") {
  CHECK(rpbell::falling_factorial_poly(ExactInt(0), 2) == IntPolynomial{0, -1, 1});
  CHECK(rpbell::falling_factorial_poly(ExactInt(2), 2) == IntPolynomial{2, 3, 1});
  CHECK(rpbell::falling_factorial_poly(ExactInt(5), 0) == IntPolynomial{1});
}

TEST_CASE("falling basis conversion") {
  CHECK(rpbell::to_falling_basis(IntPolynomial{0, 0, 1}) ==
        std::vector<ExactInt>{ExactInt(0), ExactInt(1), ExactInt(1)});
  CHECK(rpbell::to_falling_basis(IntPolynomial{7}) == std::vector<ExactInt>{ExactInt(7)});
  CHECK(rpbell::to_falling_basis(IntPolynomial{0, 0, 0, 1}) ==
        std::vector<ExactInt>{ExactInt(0), ExactInt(1), ExactInt(3), ExactInt(1)});
}

TEST_CASE("falling basis round trip up to degree 12") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial p = random_poly(rng, 12);
    CHECK(rpbell::from_falling_basis(rpbell::to_falling_basis(p)) == p);
  }
}

TEST_CASE("ring axioms on sampled inputs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntPolynomial a = random_poly(rng, 6);
    IntPolynomial b = random_poly(rng, 6);
    IntPolynomial c = random_poly(rng, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("derivative, shift, evaluation") {
  IntPolynomial p{2, 3, 1};  // z^2 + 3z + 2
  CHECK(p.derivative() == IntPolynomial{3, 2});
  CHECK(p.shifted_up(2) == IntPolynomial{0, 0, 2, 3, 1});
  CHECK(p.eval(ExactInt(-1)) == ExactInt(0));
  CHECK(p.eval(ExactRational(1, 2)) == ExactRational(15, 4));
  CHECK(p.str() == "z^2 + 3*z + 2");
}

}  // TEST_SUITE
