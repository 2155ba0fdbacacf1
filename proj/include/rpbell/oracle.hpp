#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "rpbell/exact.hpp"
#include "rpbell/restriction.hpp"

namespace rpbell {

// Ground-set sizes beyond which enumeration is refused. Overridable per
// call (the CLI wires RPBELL_ENUM_GUARD through here).
struct OracleLimits {
  int count_guard = 14;
  int enumerate_guard = 10;
};

// A counting problem over partitions of [n]. The restriction sets are the
// consecutive intervals {1..s1}, {s1+1..s1+s2}, ... laid out in the order
// given; sizes need not be sorted, so permuted layouts can be tested
// directly.
struct PartitionSpec {
  int n = 0;
  std::vector<int> restriction_sizes;
  std::optional<int> blocks;  // exact block count; absent = any

  static PartitionSpec of(int n, const RestrictionVector& r,
                          std::optional<int> blocks = std::nullopt);
};

// Exact count of partitions of [n] (into exactly `blocks` blocks when
// given) in which every restriction interval has its elements in pairwise
// distinct blocks. Enumerates restricted-growth strings, abandoning a
// prefix as soon as two members of one interval collide.
ExactInt count_partitions(const PartitionSpec& spec, const OracleLimits& limits = {});

// One count per block count: result[k] is the number of admissible
// partitions of [n] into exactly k blocks, 0 <= k <= n. A single sweep,
// for suites that need the whole distribution.
std::vector<ExactInt> count_partitions_by_blocks(const PartitionSpec& spec,
                                                 const OracleLimits& limits = {});

// Visits each admissible restricted-growth string once, lexicographically.
void for_each_partition(const PartitionSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit,
                        const OracleLimits& limits = {});

std::vector<std::vector<int>> enumerate_partitions(const PartitionSpec& spec,
                                                   const OracleLimits& limits = {});

}  // namespace rpbell
