#include <doctest.h>

#include "rpbell/identities.hpp"
#include "rpbell/oracle.hpp"
#include "rpbell/restriction.hpp"
#include "rpbell/stirling.hpp"

using rpbell::ACoeffs;
using rpbell::ExactInt;
using rpbell::PartitionSpec;
using rpbell::RestrictionVector;

TEST_SUITE("restriction") {

TEST_CASE("restriction vector canonical form") {
  RestrictionVector r{3, 1, 2};
  CHECK(r.parts() == std::vector<int>{1, 2, 3});
  CHECK(r.total() == 6);
  CHECK(r.last() == 3);
  CHECK(r.prefix() == std::vector<int>{1, 2});
  CHECK(r.prefix_total() == 3);
  CHECK(r.incremented_last(2).parts() == std::vector<int>{1, 2, 5});
  CHECK(r.str() == "(1,2,3)");
  CHECK(RestrictionVector::parse("2,2") == RestrictionVector{2, 2});
  CHECK_THROWS_AS(RestrictionVector(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS((RestrictionVector{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(RestrictionVector::parse("2,x"), std::invalid_argument);
}

TEST_CASE("connection coefficients") {
  CHECK(rpbell::a_coeffs({2}).values() ==
        std::vector<ExactInt>{ExactInt(0), ExactInt(-1), ExactInt(1)});
  CHECK(rpbell::a_coeffs({}).values() == std::vector<ExactInt>{ExactInt(1)});
  CHECK(rpbell::a_coeffs({1, 1}).values() ==
        std::vector<ExactInt>{ExactInt(0), ExactInt(0), ExactInt(1)});
}

TEST_CASE("connection coefficient invariants") {
  for (auto prefix : {std::vector<int>{1}, {2}, {3}, {4}, {1, 2}, {2, 2}, {2, 3}, {1, 2, 3}}) {
    ACoeffs a = rpbell::a_coeffs(prefix);
    int total = 0;
    for (int part : prefix) total += part;
    REQUIRE(a.size() == total + 1);
    CHECK(a.at(total) == ExactInt(1));  // monic
    for (int k = 0; k < static_cast<int>(prefix.size()); ++k) {
      CHECK(a.at(k) == ExactInt(0));  // divisible by u^p
    }
    for (int k = 0; k <= total; ++k) {
      // signs alternate from the top
      ExactInt signed_value = (total - k) % 2 == 0 ? a.at(k) : -a.at(k);
      CHECK(signed_value >= ExactInt(0));
    }
    CHECK(a.values() == rpbell::a_coeffs_via_stirling(prefix).values());
  }
}

TEST_CASE("direct restricted Stirling values") {
  CHECK(rpbell::rp_stirling2(4, 2, {2, 2}) == ExactInt(2));
  CHECK(rpbell::rp_stirling2(4, 3, {2, 2}) == ExactInt(4));
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(rpbell::rp_stirling2(n, k, {1}) == rpbell::stirling2(n, k));
    }
  }
  CHECK_THROWS_AS(rpbell::rp_stirling2(3, 2, {2, 2}), std::domain_error);
}

TEST_CASE("reduction route examples") {
  CHECK(rpbell::rp_stirling2_via_reduction(4, 2, {2, 2}) == ExactInt(2));
  CHECK(rpbell::rp_stirling2_via_reduction(4, 4, {2, 2}) == ExactInt(1));
  CHECK(rpbell::rp_stirling2_via_reduction(5, 2, {1, 2}) == rpbell::r_stirling2(5, 2, 2));
  CHECK_THROWS_AS(rpbell::rp_stirling2_via_reduction(3, 2, {2, 2}), std::domain_error);
}

TEST_CASE("both algorithms agree with the oracle") {
  for (const auto& r : rpbell::restriction_grid(5)) {
    for (int n = r.total(); n <= 8; ++n) {
      auto oracle = rpbell::count_partitions_by_blocks(PartitionSpec::of(n, r));
      for (int k = 0; k <= n; ++k) {
        ExactInt direct = rpbell::rp_stirling2(n, k, r);
        CHECK(direct == oracle[static_cast<size_t>(k)]);
        CHECK(direct == rpbell::rp_stirling2_via_reduction(n, k, r));
      }
    }
  }
}

TEST_CASE("size-1 parts are vacuous") {
  for (const auto& r : rpbell::restriction_grid(4, 2)) {
    std::vector<int> padded = r.parts();
    padded.push_back(1);
    RestrictionVector r1(padded);
    for (int n = r1.total(); n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(rpbell::rp_stirling2(n, k, r) == rpbell::rp_stirling2(n, k, r1));
      }
    }
  }
}

TEST_CASE("counts are symmetric in the interval layout") {
  // The canonical sorted computation matches oracle counts over every
  // permuted (non-canonical) layout.
  RestrictionVector r{1, 2, 2};
  for (auto layout : {std::vector<int>{2, 1, 2}, {2, 2, 1}, {1, 2, 2}}) {
    for (int n = 5; n <= 8; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(rpbell::rp_stirling2(n, k, r) ==
              rpbell::count_partitions(PartitionSpec{n, layout, k}));
      }
    }
  }
}

TEST_CASE("support is exactly r_p <= k <= n") {
  for (const auto& r : rpbell::restriction_grid(5)) {
    for (int n = r.total(); n <= 7; ++n) {
      for (int k = 0; k <= n + 2; ++k) {
        bool positive = rpbell::rp_stirling2(n, k, r) > ExactInt(0);
        CHECK(positive == (k >= r.last() && k <= n));
      }
    }
  }
}

}  // TEST_SUITE
