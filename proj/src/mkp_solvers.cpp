#include "knapkit/mkp_solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

#include "knapkit/parameters.hpp"
#include "knapkit/partitions.hpp"
#include "tables.hpp"

namespace knapkit {

namespace {

std::vector<std::size_t> descending_order(std::span<const Value> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  return order;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a + b < a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// sum_{t=1..k} C(n, t) * B(t), saturated: the XP search space.
std::uint64_t xp_candidates(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t t = 1; t <= k && t <= n; ++t) {
    const std::uint64_t next = saturating_mul(binom, n - t + 1);
    binom = next == std::numeric_limits<std::uint64_t>::max() ? next : next / t;
    const std::uint64_t bell =
        t > 25 ? std::numeric_limits<std::uint64_t>::max() : bell_number(t);
    total = saturating_add(total, saturating_mul(binom, bell));
  }
  return total;
}

// Tries to pack each labelled block into its own knapsack. labels[t] is the
// block of items[t]; block `skip` (if any) is left out.
std::optional<PackingSolution> pack_blocks(
    const MkpInstance& instance, std::span<const std::size_t> items,
    std::span<const std::size_t> labels, std::size_t block_count,
    std::optional<std::size_t> skip) {
  std::vector<Value> sizes(block_count, 0);
  for (std::size_t t = 0; t < items.size(); ++t) {
    sizes[labels[t]] += instance.size(items[t]);
  }
  std::vector<Value> packed_sizes;
  std::vector<std::size_t> packed_blocks;
  for (std::size_t b = 0; b < block_count; ++b) {
    if (skip && *skip == b) continue;
    packed_sizes.push_back(sizes[b]);
    packed_blocks.push_back(b);
  }
  const auto match = match_blocks(packed_sizes, instance.capacities());
  if (!match) return std::nullopt;
  std::vector<std::size_t> knapsack_of_block(block_count, 0);
  for (std::size_t t = 0; t < packed_blocks.size(); ++t) {
    knapsack_of_block[packed_blocks[t]] = (*match)[t];
  }
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> knapsacks;
  Value profit = 0;
  for (std::size_t t = 0; t < items.size(); ++t) {
    if (skip && *skip == labels[t]) continue;
    chosen.push_back(items[t]);
    knapsacks.push_back(knapsack_of_block[labels[t]]);
    profit += instance.profit(items[t]);
  }
  return PackingSolution::assignment(std::move(chosen), std::move(knapsacks),
                                     profit);
}

}  // namespace

std::optional<std::vector<std::size_t>> match_blocks(
    std::span<const Value> block_sizes, std::span<const Value> capacities) {
  if (block_sizes.size() > capacities.size()) return std::nullopt;
  const auto blocks = descending_order(block_sizes);
  const auto bins = descending_order(capacities);
  std::vector<std::size_t> out(block_sizes.size());
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    if (block_sizes[blocks[t]] > capacities[bins[t]]) return std::nullopt;
    out[blocks[t]] = bins[t];
  }
  return out;
}

PackingSolution mkp_dp(const MkpInstance& instance, const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const std::size_t m = instance.knapsack_count();
  const detail::CapacityGrid grid(instance.capacities());
  const std::string product = "prod(c_i+1) = " + std::to_string(grid.cells());
  require_cells(saturating_mul(n, grid.cells()), limits, "mkp_dp: n*" + product);
  if (m >= std::numeric_limits<std::uint8_t>::max()) {
    throw ResourceError("mkp_dp supports at most 254 knapsacks");
  }

  const auto cells = static_cast<std::size_t>(grid.cells());
  std::vector<Value> best(cells, 0);
  // choice[j * cells + r]: 0 = item j unused at state r, i + 1 = knapsack i.
  std::vector<std::uint8_t> choice(n * cells, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto s = static_cast<std::size_t>(instance.size(j));
    const Value p = instance.profit(j);
    detail::DescendingGridCursor cursor(grid);
    do {
      const std::size_t r = cursor.index();
      for (std::size_t i = 0; i < m; ++i) {
        if (cursor.digit(i) < s) continue;
        const Value candidate = best[r - s * grid.stride(i)] + p;
        if (candidate > best[r]) {
          best[r] = candidate;
          choice[j * cells + r] = static_cast<std::uint8_t>(i + 1);
        }
      }
    } while (cursor.advance());
  }

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> knapsacks;
  std::size_t r = grid.full_index();
  for (std::size_t j = n; j-- > 0;) {
    const std::uint8_t pick = choice[j * cells + r];
    if (pick == 0) continue;
    chosen.push_back(j);
    knapsacks.push_back(pick - 1U);
    r -= static_cast<std::size_t>(instance.size(j)) * grid.stride(pick - 1U);
  }
  return PackingSolution::assignment(std::move(chosen), std::move(knapsacks),
                                     best[grid.full_index()]);
}

PackingSolution mkp_partition_solve(const MkpInstance& instance,
                                    const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const std::size_t m = instance.knapsack_count();
  if (n > limits.partition_cap) {
    throw ResourceError("mkp_partition_solve: n = " + std::to_string(n) +
                        " exceeds the partition cap of " +
                        std::to_string(limits.partition_cap));
  }
  std::vector<std::size_t> items(n);
  std::iota(items.begin(), items.end(), std::size_t{0});

  PackingSolution best = PackingSolution::assignment({}, {}, 0);
  auto consider = [&](std::span<const std::size_t> labels, std::size_t blocks,
                      std::optional<std::size_t> skip) {
    auto packed = pack_blocks(instance, items, labels, blocks, skip);
    if (packed && packed->profit > best.profit) best = std::move(*packed);
  };

  PartitionEnumerator walk(n, m + 1);
  while (walk.next()) {
    const auto labels = walk.labels();
    const std::size_t blocks = walk.block_count();
    if (blocks <= m) consider(labels, blocks, std::nullopt);
    for (std::size_t b = 0; b < blocks; ++b) consider(labels, blocks, b);
  }
  return best;
}

DecisionResult mkp_decide_xp(const MkpInstance& instance, Value k,
                             const SolverLimits& limits) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  const std::size_t n = instance.item_count();
  const std::size_t m = instance.knapsack_count();
  const std::size_t max_items =
      static_cast<std::size_t>(std::min<Value>(k, static_cast<Value>(n)));
  require_enumeration(xp_candidates(n, max_items), limits, "mkp_decide_xp");

  for (std::size_t size = 1; size <= max_items; ++size) {
    std::vector<std::size_t> combo(size);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    while (true) {
      Value profit = 0;
      for (std::size_t j : combo) profit += instance.profit(j);
      if (profit >= k) {
        PartitionEnumerator walk(size, m);
        while (walk.next()) {
          auto packed = pack_blocks(instance, combo, walk.labels(),
                                    walk.block_count(), std::nullopt);
          if (packed) return {true, std::move(*packed), "xp-k"};
        }
      }
      std::size_t t = size;
      while (t > 0 && combo[t - 1] == n - size + t - 1) --t;
      if (t == 0) break;
      ++combo[t - 1];
      for (std::size_t u = t; u < size; ++u) combo[u] = combo[u - 1] + 1;
    }
  }
  return {false, std::nullopt, "xp-k"};
}

PackingSolution mkp_assignment_bruteforce(const MkpInstance& instance,
                                          const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const std::size_t m = instance.knapsack_count();
  std::uint64_t candidates = 1;
  for (std::size_t j = 0; j < n; ++j) candidates = saturating_mul(candidates, m + 1);
  require_enumeration(candidates, limits, "mkp_assignment_bruteforce");

  // Odometer over digits target[j] in 0..m; 0 leaves item j out.
  std::vector<std::size_t> target(n, 0);
  std::vector<Value> load(m + 1, 0);
  std::size_t overloaded = 0;
  Value profit = 0;
  Value best_profit = 0;
  std::vector<std::size_t> best_target(n, 0);

  auto move_item = [&](std::size_t j, std::size_t to) {
    const std::size_t from = target[j];
    const Value s = instance.size(j);
    if (from > 0) {
      const bool was_over = load[from] > instance.capacity(from - 1);
      load[from] -= s;
      if (was_over && load[from] <= instance.capacity(from - 1)) --overloaded;
      profit -= instance.profit(j);
    }
    if (to > 0) {
      const bool was_over = load[to] > instance.capacity(to - 1);
      load[to] += s;
      if (!was_over && load[to] > instance.capacity(to - 1)) ++overloaded;
      profit += instance.profit(j);
    }
    target[j] = to;
  };

  while (true) {
    std::size_t j = 0;
    while (j < n && target[j] == m) {
      move_item(j, 0);
      ++j;
    }
    if (j == n) break;
    move_item(j, target[j] + 1);
    if (overloaded == 0 && profit > best_profit) {
      best_profit = profit;
      best_target = target;
    }
  }

  std::vector<std::size_t> chosen;
  std::vector<std::size_t> knapsacks;
  for (std::size_t j = 0; j < n; ++j) {
    if (best_target[j] == 0) continue;
    chosen.push_back(j);
    knapsacks.push_back(best_target[j] - 1);
  }
  return PackingSolution::assignment(std::move(chosen), std::move(knapsacks),
                                     best_profit);
}

std::string to_string(MkpStrategy strategy) {
  switch (strategy) {
    case MkpStrategy::kAuto:
      return "auto";
    case MkpStrategy::kDp:
      return "dp";
    case MkpStrategy::kPartition:
      return "partition";
    case MkpStrategy::kAssign:
      return "assign";
    case MkpStrategy::kXpK:
      return "xp-k";
  }
  return "unknown";
}

MkpStrategy parse_mkp_strategy(const std::string& name) {
  for (auto s : {MkpStrategy::kAuto, MkpStrategy::kDp, MkpStrategy::kPartition,
                 MkpStrategy::kAssign, MkpStrategy::kXpK}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown MKP strategy '" + name + "'");
}

DecisionResult mkp_decide(const MkpInstance& instance, Value k,
                          MkpStrategy strategy, const SolverLimits& limits) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  auto from = [k](PackingSolution solution, const char* method) {
    DecisionResult out{solution.profit >= k, std::nullopt, method};
    if (out.answer) out.witness = std::move(solution);
    return out;
  };
  switch (strategy) {
    case MkpStrategy::kDp:
      return from(mkp_dp(instance, limits), "dp");
    case MkpStrategy::kPartition:
      return from(mkp_partition_solve(instance, limits), "partition");
    case MkpStrategy::kAssign:
      return from(mkp_assignment_bruteforce(instance, limits), "assign");
    case MkpStrategy::kXpK:
      return mkp_decide_xp(instance, k, limits);
    case MkpStrategy::kAuto:
      break;
  }
  if (k > instance.total_profit()) return {false, std::nullopt, "auto:profit-sum"};
  MkpStrategy chosen = MkpStrategy::kDp;
  switch (plan_solver(extract_profile(instance, k)).algorithm) {
    case Algorithm::kMkpPartition:
      chosen = MkpStrategy::kPartition;
      break;
    case Algorithm::kMkpAssignment:
      chosen = MkpStrategy::kAssign;
      break;
    case Algorithm::kMkpXp:
      chosen = MkpStrategy::kXpK;
      break;
    default:
      break;
  }
  auto result = mkp_decide(instance, k, chosen, limits);
  result.method = "auto:" + result.method;
  return result;
}

}  // namespace knapkit
