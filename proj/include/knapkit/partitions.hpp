#ifndef KNAPKIT_PARTITIONS_HPP
#define KNAPKIT_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "knapkit/limits.hpp"

namespace knapkit {

// Disjoint, non-empty blocks covering {0, ..., ground_size - 1}. Blocks are
// ordered by their smallest element; elements within a block ascend.
struct SetPartition {
  std::vector<std::vector<std::size_t>> blocks;

  bool operator==(const SetPartition&) const = default;
  auto operator<=>(const SetPartition&) const = default;
};

// Bell number from B(n) = sum_{i<n} C(n-1, i) B(i), B(0) = 1. Exact; throws
// OverflowError past B(25).
std::uint64_t bell_number(std::size_t n);

// Walks set partitions as restricted growth strings a[0..n-1] (a[0] = 0,
// a[i] <= 1 + max(a[0..i-1])) in lexicographic order. Element i belongs to
// block a[i]. `max_blocks` limits the number of blocks.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(
      std::size_t ground_size,
      std::size_t max_blocks = std::numeric_limits<std::size_t>::max());

  // Moves to the next partition; the first call yields the first one.
  bool next();

  std::span<const std::size_t> labels() const { return labels_; }
  std::size_t block_count() const;
  SetPartition partition() const;

 private:
  std::size_t n_;
  std::size_t max_blocks_;
  bool started_ = false;
  std::vector<std::size_t> labels_;
  // prefix_max_[i] = max(labels_[0..i]).
  std::vector<std::size_t> prefix_max_;
};

// Every partition of a ground set of the given size, in enumeration order.
// ground_size is limited by limits.partition_cap.
std::vector<SetPartition> enumerate_partitions(std::size_t ground_size,
                                               const SolverLimits& limits = {});

// Number of partitions produced by walking the enumerator to the end.
std::uint64_t count_partitions(std::size_t ground_size,
                               const SolverLimits& limits = {});

}  // namespace knapkit

#endif  // KNAPKIT_PARTITIONS_HPP
