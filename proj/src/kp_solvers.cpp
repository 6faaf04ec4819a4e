#include "knapkit/kp_solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "knapkit/parameters.hpp"
#include "subset_masks.hpp"
#include "tables.hpp"

namespace knapkit {

namespace {

constexpr Value kUnreachable = std::numeric_limits<Value>::max();

Value profit_sum(const KpInstance& instance,
                 const std::vector<std::size_t>& items) {
  Value total = 0;
  for (std::size_t j : items) total += instance.profit(j);
  return total;
}

}  // namespace

PackingSolution kp_dp_capacity(const KpInstance& instance,
                               const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const Value c = instance.capacity();
  require_cells(saturating_mul(n, static_cast<std::uint64_t>(c) + 1), limits,
                "kp_dp_capacity: n*(c+1) = " + std::to_string(n) + "*" +
                    std::to_string(c + 1));
  const auto width = static_cast<std::size_t>(c) + 1;
  std::vector<Value> best(width, 0);
  detail::ChoiceBits take(n, width);
  for (std::size_t j = 0; j < n; ++j) {
    const auto s = static_cast<std::size_t>(instance.size(j));
    const Value p = instance.profit(j);
    for (std::size_t r = width; r-- > s;) {
      const Value candidate = best[r - s] + p;
      if (candidate > best[r]) {
        best[r] = candidate;
        take.set(j, r);
      }
    }
  }
  std::vector<std::size_t> chosen;
  std::size_t r = width - 1;
  for (std::size_t j = n; j-- > 0;) {
    if (take.test(j, r)) {
      chosen.push_back(j);
      r -= static_cast<std::size_t>(instance.size(j));
    }
  }
  return PackingSolution::subset(std::move(chosen), best[width - 1]);
}

PackingSolution kp_dp_profit(const KpInstance& instance,
                             std::optional<Value> upper_bound,
                             const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  const Value bound = upper_bound.value_or(instance.total_profit());
  if (bound < 0) throw ArgumentError("profit upper bound must be non-negative");
  require_cells(saturating_mul(n, static_cast<std::uint64_t>(bound) + 1), limits,
                "kp_dp_profit: n*(U+1) = " + std::to_string(n) + "*" +
                    std::to_string(bound + 1));
  const auto width = static_cast<std::size_t>(bound) + 1;
  // min_size[q]: smallest total size reaching profit exactly q.
  std::vector<Value> min_size(width, kUnreachable);
  min_size[0] = 0;
  detail::ChoiceBits take(n, width);
  for (std::size_t j = 0; j < n; ++j) {
    const Value p = instance.profit(j);
    if (p > bound) continue;
    const auto step = static_cast<std::size_t>(p);
    const Value s = instance.size(j);
    for (std::size_t q = width; q-- > step;) {
      const Value prev = min_size[q - step];
      if (prev != kUnreachable && prev + s < min_size[q]) {
        min_size[q] = prev + s;
        take.set(j, q);
      }
    }
  }
  std::size_t q = width - 1;
  while (q > 0 && min_size[q] > instance.capacity()) --q;
  const auto profit = static_cast<Value>(q);
  std::vector<std::size_t> chosen;
  for (std::size_t j = n; j-- > 0;) {
    if (take.test(j, q)) {
      chosen.push_back(j);
      q -= static_cast<std::size_t>(instance.profit(j));
    }
  }
  return PackingSolution::subset(std::move(chosen), profit);
}

PackingSolution kp_bruteforce(const KpInstance& instance,
                              const SolverLimits& limits) {
  const std::size_t n = instance.item_count();
  detail::require_subset_enumeration(n, limits, "kp_bruteforce");
  // Gray-code walk: one item flips per step.
  Value load = 0;
  Value profit = 0;
  detail::Mask current = 0;
  detail::Mask best_mask = 0;
  Value best_profit = 0;
  const detail::Mask total = detail::Mask{1} << n;
  for (detail::Mask step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    current ^= detail::Mask{1} << j;
    const bool added = (current >> j) & 1U;
    load += added ? instance.size(j) : -instance.size(j);
    profit += added ? instance.profit(j) : -instance.profit(j);
    if (load <= instance.capacity() &&
        (profit > best_profit ||
         (profit == best_profit && detail::lex_less(current, best_mask)))) {
      best_profit = profit;
      best_mask = current;
    }
  }
  return PackingSolution::subset(detail::mask_items(best_mask), best_profit);
}

double fptas_scale(const KpInstance& instance, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ArgumentError("epsilon must lie in (0, 1), got " +
                        std::to_string(epsilon));
  }
  Value p_ref = 0;
  for (std::size_t j = 0; j < instance.item_count(); ++j) {
    if (instance.size(j) <= instance.capacity()) {
      p_ref = std::max(p_ref, instance.profit(j));
    }
  }
  // Scaling by K loses at most 2nK = p_ref * epsilon / (1 + epsilon) profit,
  // counting the floor plus the bump of zero-valued items to 1. That gives
  // A >= OPT / (1 + epsilon) since OPT >= p_ref.
  return epsilon / (1.0 + epsilon) * static_cast<double>(p_ref) /
         (2.0 * static_cast<double>(instance.item_count()));
}

std::vector<Value> scaled_profits(const KpInstance& instance, double scale) {
  std::vector<Value> scaled(instance.item_count());
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    const auto value = static_cast<Value>(
        std::floor(static_cast<double>(instance.profit(j)) / scale));
    scaled[j] = std::max<Value>(1, value);
  }
  return scaled;
}

PackingSolution kp_fptas(const KpInstance& instance, double epsilon,
                         const SolverLimits& limits) {
  const double scale = fptas_scale(instance, epsilon);
  if (scale == 0.0) return PackingSolution::subset({}, 0);
  if (scale <= 1.0) return kp_dp_profit(instance, std::nullopt, limits);

  const KpInstance rounded(scaled_profits(instance, scale),
                           std::vector<Value>(instance.sizes().begin(),
                                              instance.sizes().end()),
                           instance.capacity());
  auto solution = kp_dp_profit(rounded, std::nullopt, limits);
  solution.profit = profit_sum(instance, solution.items);
  return solution;
}

std::string to_string(KpStrategy strategy) {
  switch (strategy) {
    case KpStrategy::kAuto:
      return "auto";
    case KpStrategy::kDpCapacity:
      return "dp-capacity";
    case KpStrategy::kDpProfit:
      return "dp-profit";
    case KpStrategy::kFptasK:
      return "fptas-k";
    case KpStrategy::kBrute:
      return "brute";
  }
  return "unknown";
}

KpStrategy parse_kp_strategy(const std::string& name) {
  for (auto s : {KpStrategy::kAuto, KpStrategy::kDpCapacity,
                 KpStrategy::kDpProfit, KpStrategy::kFptasK,
                 KpStrategy::kBrute}) {
    if (to_string(s) == name) return s;
  }
  throw ArgumentError("unknown KP strategy '" + name + "'");
}

namespace {

DecisionResult decide_from(PackingSolution solution, Value k,
                           std::string method) {
  DecisionResult out;
  out.method = std::move(method);
  out.answer = solution.profit >= k;
  if (out.answer) out.witness = std::move(solution);
  return out;
}

KpStrategy strategy_for(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kKpDpProfit:
      return KpStrategy::kDpProfit;
    case Algorithm::kKpFptasDecision:
      return KpStrategy::kFptasK;
    case Algorithm::kKpBruteForce:
      return KpStrategy::kBrute;
    default:
      return KpStrategy::kDpCapacity;
  }
}

}  // namespace

DecisionResult kp_decide(const KpInstance& instance, Value k,
                         KpStrategy strategy, const SolverLimits& limits) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  switch (strategy) {
    case KpStrategy::kDpCapacity:
      return decide_from(kp_dp_capacity(instance, limits), k, "dp-capacity");
    case KpStrategy::kDpProfit:
      return decide_from(kp_dp_profit(instance, std::nullopt, limits), k,
                         "dp-profit");
    case KpStrategy::kBrute:
      return decide_from(kp_bruteforce(instance, limits), k, "brute");
    case KpStrategy::kFptasK: {
      // A < k implies OPT <= (k - 1)(1 + 1/(2k)) < k.
      const double epsilon = 1.0 / (2.0 * static_cast<double>(k));
      return decide_from(kp_fptas(instance, epsilon, limits), k, "fptas-k");
    }
    case KpStrategy::kAuto:
      break;
  }

  if (k > instance.total_profit()) return {false, std::nullopt, "auto:profit-sum"};
  if (instance.total_size() <= instance.capacity()) {
    return decide_from(all_items_solution(instance), k, "auto:all-fit");
  }
  const auto plan = plan_solver(extract_profile(instance, k));
  auto result = kp_decide(instance, k, strategy_for(plan.algorithm), limits);
  result.method = "auto:" + result.method;
  return result;
}

}  // namespace knapkit
