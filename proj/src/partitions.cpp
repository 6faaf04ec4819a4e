#include "knapkit/partitions.hpp"

#include <algorithm>
#include <string>

#include "knapkit/errors.hpp"

namespace knapkit {

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) {
    throw OverflowError("B(" + std::to_string(n) + ") does not fit 64 bits");
  }
  std::vector<std::uint64_t> bell(n + 1, 0);
  bell[0] = 1;
  // Pascal row for C(k-1, .), grown one row per step.
  std::vector<std::uint64_t> row{1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      total += row[i] * bell[i];
    }
    bell[k] = total;
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return bell[n];
}

PartitionEnumerator::PartitionEnumerator(std::size_t ground_size,
                                         std::size_t max_blocks)
    : n_(ground_size),
      max_blocks_(std::max<std::size_t>(max_blocks, 1)),
      labels_(ground_size, 0),
      prefix_max_(ground_size, 0) {}

bool PartitionEnumerator::next() {
  if (!started_) {
    started_ = true;
    return true;  // all-zero labels; the empty string for n = 0
  }
  // Rightmost position that can still grow.
  for (std::size_t i = n_; i-- > 1;) {
    const std::size_t bound = std::min(prefix_max_[i - 1] + 1, max_blocks_ - 1);
    if (labels_[i] < bound) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t t = i + 1; t < n_; ++t) {
        labels_[t] = 0;
        prefix_max_[t] = prefix_max_[i];
      }
      return true;
    }
  }
  return false;
}

std::size_t PartitionEnumerator::block_count() const {
  return n_ == 0 ? 0 : prefix_max_[n_ - 1] + 1;
}

SetPartition PartitionEnumerator::partition() const {
  SetPartition out;
  out.blocks.resize(block_count());
  for (std::size_t i = 0; i < n_; ++i) out.blocks[labels_[i]].push_back(i);
  return out;
}

namespace {

void require_partition_cap(std::size_t ground_size, const SolverLimits& limits) {
  if (ground_size > limits.partition_cap) {
    throw ResourceError("partition enumeration over " +
                        std::to_string(ground_size) +
                        " elements exceeds the cap of " +
                        std::to_string(limits.partition_cap));
  }
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(std::size_t ground_size,
                                               const SolverLimits& limits) {
  require_partition_cap(ground_size, limits);
  std::vector<SetPartition> out;
  PartitionEnumerator walk(ground_size);
  while (walk.next()) out.push_back(walk.partition());
  return out;
}

std::uint64_t count_partitions(std::size_t ground_size,
                               const SolverLimits& limits) {
  require_partition_cap(ground_size, limits);
  std::uint64_t count = 0;
  PartitionEnumerator walk(ground_size);
  while (walk.next()) ++count;
  return count;
}

}  // namespace knapkit
