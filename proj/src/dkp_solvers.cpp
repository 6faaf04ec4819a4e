#include "knapkit/dkp_solvers.hpp"

#include <algorithm>
#include <limits>

#include "knapkit/parameters.hpp"
#include "subset_masks.hpp"
#include "tables.hpp"

namespace knapkit {

namespace {

// Number of subsets of size 1..k of an n-set, saturated.
std::uint64_t subsets_up_to(std::size_t n, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;
  for (std::size_t t = 1; t <= k && t <= n; ++t) {
    // C(n, t) = C(n, t-1) * (n - t + 1) / t; exact in this order.
    const std::uint64_t next = saturating_mul(binom, n - t + 1);
    binom = next == std::numeric_limits<std::uint64_t>::max() ? next : next / t;
    total = total + binom < total ? std::numeric_limits<std::uint64_t>::max()
                                  : total + binom;
  }
  return total;
}

}  // namespace

PackingSolution dkp_dp(const DkpInstance& instance, const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const std::size_t d = instance.dimension_count();
  const detail::CapacityGrid grid(instance.capacities());
  const std::string product = "prod(c_i+1) = " + std::to_string(grid.cells());
  require_cells(grid.cells(), limits, "dkp_dp: " + product);
  require_cells(saturating_mul(n, grid.cells()), limits,
                "dkp_dp: n*" + product);

  const auto cells = static_cast<std::size_t>(grid.cells());
  std::vector<Value> best(cells, 0);
  detail::ChoiceBits take(n, cells);
  std::vector<std::size_t> item_size(d);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t offset = 0;
    for (std::size_t i = 0; i < d; ++i) {
      item_size[i] = static_cast<std::size_t>(instance.size(i, j));
      offset += item_size[i] * grid.stride(i);
    }
    const Value p = instance.profit(j);
    // Descending order reads best[r - s] before item j can touch it.
    detail::DescendingGridCursor cursor(grid);
    do {
      bool fits = true;
      for (std::size_t i = 0; i < d && fits; ++i) {
        fits = cursor.digit(i) >= item_size[i];
      }
      if (!fits) continue;
      const std::size_t r = cursor.index();
      const Value candidate = best[r - offset] + p;
      if (candidate > best[r]) {
        best[r] = candidate;
        take.set(j, r);
      }
    } while (cursor.advance());
  }

  std::vector<std::size_t> chosen;
  std::size_t r = grid.full_index();
  for (std::size_t j = n; j-- > 0;) {
    if (take.test(j, r)) {
      chosen.push_back(j);
      for (std::size_t i = 0; i < d; ++i) {
        r -= static_cast<std::size_t>(instance.size(i, j)) * grid.stride(i);
      }
    }
  }
  return PackingSolution::subset(std::move(chosen), best[grid.full_index()]);
}

PackingSolution dkp_bruteforce(const DkpInstance& instance,
                               const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const std::size_t d = instance.dimension_count();
  detail::require_subset_enumeration(n, limits, "dkp_bruteforce");
  std::vector<Value> load(d, 0);
  Value profit = 0;
  detail::Mask current = 0;
  detail::Mask best_mask = 0;
  Value best_profit = 0;
  const detail::Mask total = detail::Mask{1} << n;
  for (detail::Mask step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    current ^= detail::Mask{1} << j;
    const Value sign = ((current >> j) & 1U) ? 1 : -1;
    bool feasible = true;
    for (std::size_t i = 0; i < d; ++i) {
      load[i] += sign * instance.size(i, j);
      feasible = feasible && load[i] <= instance.capacity(i);
    }
    profit += sign * instance.profit(j);
    if (feasible &&
        (profit > best_profit ||
         (profit == best_profit && detail::lex_less(current, best_mask)))) {
      best_profit = profit;
      best_mask = current;
    }
  }
  return PackingSolution::subset(detail::mask_items(best_mask), best_profit);
}

DecisionResult dkp_decide_xp(const DkpInstance& instance, Value k,
                             const SolverLimits& limits) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  const std::size_t n = instance.item_count();
  const std::size_t d = instance.dimension_count();
  const std::size_t max_items =
      static_cast<std::size_t>(std::min<Value>(k, static_cast<Value>(n)));
  require_enumeration(subsets_up_to(n, max_items), limits, "dkp_decide_xp");

  // Lexicographic walk over index combinations of each cardinality.
  for (std::size_t size = 1; size <= max_items; ++size) {
    std::vector<std::size_t> combo(size);
    for (std::size_t t = 0; t < size; ++t) combo[t] = t;
    while (true) {
      Value profit = 0;
      bool feasible = true;
      for (std::size_t i = 0; i < d && feasible; ++i) {
        Value load = 0;
        for (std::size_t j : combo) load += instance.size(i, j);
        feasible = load <= instance.capacity(i);
      }
      if (feasible) {
        for (std::size_t j : combo) profit += instance.profit(j);
        if (profit >= k) {
          return {true, PackingSolution::subset(combo, profit), "xp-k"};
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

DkpInstance dkp_lift_dimension(const DkpInstance& instance) {
  const std::size_t n = instance.item_count();
  auto table = instance.size_table();
  table.emplace_back(n, 1);
  std::vector<Value> capacities(instance.capacities().begin(),
                                instance.capacities().end());
  capacities.push_back(static_cast<Value>(n));
  return DkpInstance(
      std::vector<Value>(instance.profits().begin(), instance.profits().end()),
      std::move(table), std::move(capacities));
}

std::string to_string(DkpStrategy strategy) {
  switch (strategy) {
    case DkpStrategy::kAuto:
      return "auto";
    case DkpStrategy::kDp:
      return "dp";
    case DkpStrategy::kBrute:
      return "brute";
    case DkpStrategy::kXpK:
      return "xp-k";
  }
  return "unknown";
}

DkpStrategy parse_dkp_strategy(const std::string& name) {
  for (auto s : {DkpStrategy::kAuto, DkpStrategy::kDp, DkpStrategy::kBrute,
                 DkpStrategy::kXpK}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown d-KP strategy '" + name + "'");
}

DecisionResult dkp_decide(const DkpInstance& instance, Value k,
                          DkpStrategy strategy, const SolverLimits& limits) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  auto from = [k](PackingSolution solution, const char* method) {
    DecisionResult out{solution.profit >= k, std::nullopt, method};
    if (out.answer) out.witness = std::move(solution);
    return out;
  };
  switch (strategy) {
    case DkpStrategy::kDp:
      return from(dkp_dp(instance, limits), "dp");
    case DkpStrategy::kBrute:
      return from(dkp_bruteforce(instance, limits), "brute");
    case DkpStrategy::kXpK:
      return dkp_decide_xp(instance, k, limits);
    case DkpStrategy::kAuto:
      break;
  }
  if (k > instance.total_profit()) return {false, std::nullopt, "auto:profit-sum"};
  const auto plan = plan_solver(extract_profile(instance, k));
  const DkpStrategy chosen = plan.algorithm == Algorithm::kDkpXp ? DkpStrategy::kXpK
                             : plan.algorithm == Algorithm::kDkpBruteForce
                                 ? DkpStrategy::kBrute
                                 : DkpStrategy::kDp;
  auto result = dkp_decide(instance, k, chosen, limits);
  result.method = "auto:" + result.method;
  return result;
}

}  // namespace knapkit
