#ifndef KNAPKIT_MKP_SOLVERS_HPP
#define KNAPKIT_MKP_SOLVERS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"
#include "knapkit/kp_solvers.hpp"
#include "knapkit/limits.hpp"

namespace knapkit {

// DP over tuples of residual capacities, one axis per knapsack. Each item is
// left out or placed into one knapsack with enough room.
PackingSolution mkp_dp(const MkpInstance& instance,
                       const SolverLimits& limits = {});

// Enumerates partitions of the items into at most m + 1 blocks. One block may
// be declared leftover; the others must fit distinct knapsacks.
PackingSolution mkp_partition_solve(const MkpInstance& instance,
                                    const SolverLimits& limits = {});

// "OPT >= k?" over item sets of at most k items, each split into at most m
// blocks and matched to knapsacks by sorted comparison.
DecisionResult mkp_decide_xp(const MkpInstance& instance, Value k,
                             const SolverLimits& limits = {});

// Every map item -> {none, knapsack 1..m}: (m + 1)^n candidates.
PackingSolution mkp_assignment_bruteforce(const MkpInstance& instance,
                                          const SolverLimits& limits = {});

// Blocks fit into distinct knapsacks iff, after sorting both descending, the
// i-th largest block is no larger than the i-th largest capacity. Returns the
// knapsack index chosen for each block, or nullopt.
std::optional<std::vector<std::size_t>> match_blocks(
    std::span<const Value> block_sizes, std::span<const Value> capacities);

enum class MkpStrategy { kAuto, kDp, kPartition, kAssign, kXpK };

std::string to_string(MkpStrategy strategy);
MkpStrategy parse_mkp_strategy(const std::string& name);

DecisionResult mkp_decide(const MkpInstance& instance, Value k,
                          MkpStrategy strategy = MkpStrategy::kAuto,
                          const SolverLimits& limits = {});

}  // namespace knapkit

#endif  // KNAPKIT_MKP_SOLVERS_HPP
