#include "rpbell/oracle.hpp"

#include <stdexcept>

namespace rpbell {

namespace {

struct Enumerator {
  int n;
  std::optional<int> wanted_blocks;
  std::vector<int> set_of;       // restriction-set index per element, -1 if free
  std::vector<int> assignment;   // block id per element
  // used[s] is a bitmask of blocks taken by earlier members of set s;
  // n <= 14 so a 32-bit mask is plenty.
  std::vector<uint32_t> used;
  const std::function<void(const std::vector<int>&)>* visit = nullptr;
  std::vector<long>* per_block_count = nullptr;

  void run() { descend(0, 0); }

  void descend(int pos, int next_block) {
    if (pos == n) {
      if (wanted_blocks && *wanted_blocks != next_block) return;
      if (per_block_count) ++(*per_block_count)[static_cast<size_t>(next_block)];
      if (visit) (*visit)(assignment);
      return;
    }
    int set = set_of[static_cast<size_t>(pos)];
    for (int b = 0; b <= next_block && b < n; ++b) {
      if (set >= 0 && (used[static_cast<size_t>(set)] & (1u << b)) != 0) continue;
      assignment[static_cast<size_t>(pos)] = b;
      if (set >= 0) used[static_cast<size_t>(set)] |= 1u << b;
      descend(pos + 1, b == next_block ? next_block + 1 : next_block);
      if (set >= 0) used[static_cast<size_t>(set)] &= ~(1u << b);
    }
  }
};

Enumerator make_enumerator(const PartitionSpec& spec, int guard, const char* what) {
  if (spec.n < 0) throw std::domain_error("oracle: negative ground-set size");
  if (spec.n > guard) {
    throw std::domain_error(std::string("oracle: n exceeds the ") + what + " guard");
  }
  int covered = 0;
  for (int size : spec.restriction_sizes) {
    if (size < 1) throw std::invalid_argument("oracle: restriction sizes must be positive");
    covered += size;
  }
  if (covered > spec.n) {
    throw std::domain_error("oracle: restriction sets exceed ground set (n < |r|)");
  }
  Enumerator e;
  e.n = spec.n;
  e.wanted_blocks = spec.blocks;
  e.set_of.assign(static_cast<size_t>(spec.n), -1);
  int at = 0;
  for (size_t s = 0; s < spec.restriction_sizes.size(); ++s) {
    for (int i = 0; i < spec.restriction_sizes[s]; ++i) {
      e.set_of[static_cast<size_t>(at++)] = static_cast<int>(s);
    }
  }
  e.assignment.assign(static_cast<size_t>(spec.n), 0);
  e.used.assign(spec.restriction_sizes.size(), 0);
  return e;
}

}  // namespace

PartitionSpec PartitionSpec::of(int n, const RestrictionVector& r, std::optional<int> blocks) {
  return PartitionSpec{n, r.parts(), blocks};
}

ExactInt count_partitions(const PartitionSpec& spec, const OracleLimits& limits) {
  Enumerator e = make_enumerator(spec, limits.count_guard, "count");
  std::vector<long> counts(static_cast<size_t>(spec.n) + 1, 0);
  e.per_block_count = &counts;
  e.run();
  long total = 0;
  for (long c : counts) total += c;
  return ExactInt(total);
}

std::vector<ExactInt> count_partitions_by_blocks(const PartitionSpec& spec,
                                                 const OracleLimits& limits) {
  PartitionSpec all = spec;
  all.blocks.reset();
  Enumerator e = make_enumerator(all, limits.count_guard, "count");
  std::vector<long> counts(static_cast<size_t>(spec.n) + 1, 0);
  e.per_block_count = &counts;
  e.run();
  std::vector<ExactInt> result;
  result.reserve(counts.size());
  for (long c : counts) result.emplace_back(c);
  return result;
}

void for_each_partition(const PartitionSpec& spec,
                        const std::function<void(const std::vector<int>&)>& visit,
                        const OracleLimits& limits) {
  Enumerator e = make_enumerator(spec, limits.enumerate_guard, "enumerate");
  e.visit = &visit;
  e.run();
}

std::vector<std::vector<int>> enumerate_partitions(const PartitionSpec& spec,
                                                   const OracleLimits& limits) {
  std::vector<std::vector<int>> out;
  for_each_partition(spec, [&out](const std::vector<int>& rgs) { out.push_back(rgs); }, limits);
  return out;
}

}  // namespace rpbell
