#include "knapkit/reducers.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <map>
#include <numeric>

namespace knapkit {

namespace {

// Picks survivors group by group. `rank` orders items inside a group (best
// first) and `quota` is the group's survivor count.
template <class Key>
std::vector<std::size_t> keep_per_group(std::size_t n, auto&& key_of,
                                        auto&& quota, auto&& rank) {
  std::map<Key, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < n; ++j) groups[key_of(j)].push_back(j);
  std::vector<std::size_t> kept;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(), rank);
    const auto count = std::min<std::size_t>(members.size(), quota(key));
    kept.insert(kept.end(), members.begin(), members.begin() + count);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<std::size_t> complement(std::size_t n,
                                    const std::vector<std::size_t>& kept) {
  std::vector<std::size_t> out;
  std::size_t t = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (t < kept.size() && kept[t] == j) {
      ++t;
    } else {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<Value> pick(std::span<const Value> values,
                        const std::vector<std::size_t>& indices) {
  std::vector<Value> out;
  out.reserve(indices.size());
  for (std::size_t j : indices) out.push_back(values[j]);
  return out;
}

void require_survivors(const std::vector<std::size_t>& kept, const char* rule) {
  if (kept.empty()) {
    throw ContractError(std::string(rule) +
                        " removed every item; normalize the instance first");
  }
}

template <class Instance>
ReductionReport<Instance> make_report(Instance reduced, std::size_t n,
                                      std::vector<std::size_t> kept,
                                      double bound, bool strict,
                                      std::string rule) {
  ReductionReport<Instance> out{std::move(reduced), std::move(kept), {}, bound,
                                strict, 0, std::move(rule)};
  out.removed_items = complement(n, out.kept_items);
  out.achieved = out.kept_items.size();
  return out;
}

MkpInstance pick_mkp(const MkpInstance& instance,
                     const std::vector<std::size_t>& kept) {
  return MkpInstance(pick(instance.profits(), kept), pick(instance.sizes(), kept),
                     std::vector<Value>(instance.capacities().begin(),
                                        instance.capacities().end()));
}

// Highest profit first; ties go to the smaller size, then the lower index.
auto by_profit(std::span<const Value> profits, auto&& size_of) {
  return [profits, size_of](std::size_t a, std::size_t b) {
    if (profits[a] != profits[b]) return profits[a] > profits[b];
    if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
    return a < b;
  };
}

// Smallest size first; ties go to the lower index.
auto by_size(std::span<const Value> sizes) {
  return [sizes](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
    return a < b;
  };
}

}  // namespace

ReductionReport<KpInstance> reduce_kp_by_capacity(const KpInstance& instance) {
  const Value c = instance.capacity();
  const auto sizes = instance.sizes();
  auto kept = keep_per_group<Value>(
      instance.item_count(), [&](std::size_t j) { return sizes[j]; },
      [&](Value s) { return static_cast<std::size_t>(c / s); },
      by_profit(instance.profits(), [&](std::size_t j) { return sizes[j]; }));
  require_survivors(kept, "reduce_kp_by_capacity");
  KpInstance reduced(pick(instance.profits(), kept), pick(sizes, kept), c);
  const auto cd = static_cast<double>(c);
  return make_report(std::move(reduced), instance.item_count(), std::move(kept),
                     cd * (std::log(cd) + 1.0), c >= 2, "kp-capacity");
}

ReductionReport<DkpInstance> reduce_dkp_by_size_vectors(
    const DkpInstance& instance) {
  const std::size_t d = instance.dimension_count();
  std::vector<std::vector<Value>> vectors(instance.item_count());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    vectors[j] = instance.size_vector(j);
  }
  auto quota = [&](const std::vector<Value>& s) {
    Value q = std::numeric_limits<Value>::max();
    for (std::size_t i = 0; i < d; ++i) {
      if (s[i] != 0) q = std::min(q, instance.capacity(i) / s[i]);
    }
    return static_cast<std::size_t>(q);
  };
  // Items of one group share their size vector, so ties fall to the index.
  auto kept = keep_per_group<std::vector<Value>>(
      instance.item_count(), [&](std::size_t j) { return vectors[j]; }, quota,
      by_profit(instance.profits(), [](std::size_t) { return Value{0}; }));
  require_survivors(kept, "reduce_dkp_by_size_vectors");

  std::vector<std::vector<Value>> table(d);
  for (std::size_t i = 0; i < d; ++i) {
    table[i] = pick(instance.dimension_sizes(i), kept);
  }
  DkpInstance reduced(pick(instance.profits(), kept), std::move(table),
                      std::vector<Value>(instance.capacities().begin(),
                                         instance.capacities().end()));
  const auto caps = instance.capacities();
  double cells = 1.0;
  for (Value c : caps) cells *= static_cast<double>(c) + 1.0;
  const auto c_min = static_cast<double>(*std::min_element(caps.begin(), caps.end()));
  return make_report(std::move(reduced), instance.item_count(), std::move(kept),
                     c_min * (cells - 1.0), false, "dkp-size-vectors");
}

ReductionReport<MkpInstance> reduce_mkp_by_capacity_sum(
    const MkpInstance& instance) {
  const Value c_max = instance.max_capacity();
  Value total = 0;
  for (Value c : instance.capacities()) total = checked_add(total, c);
  const auto sizes = instance.sizes();
  auto kept = keep_per_group<Value>(
      instance.item_count(), [&](std::size_t j) { return sizes[j]; },
      [&](Value s) {
        return s > c_max ? std::size_t{0} : static_cast<std::size_t>(total / s);
      },
      by_profit(instance.profits(), [&](std::size_t j) { return sizes[j]; }));
  require_survivors(kept, "reduce_mkp_by_capacity_sum");
  auto reduced = pick_mkp(instance, kept);
  const auto td = static_cast<double>(total);
  return make_report(std::move(reduced), instance.item_count(),
                     std::move(kept),
                     td * (std::log(static_cast<double>(c_max)) + 1.0),
                     c_max >= 2, "mkp-capacity-sum");
}

ReductionReport<MkpInstance> reduce_mkp_by_profit_threshold(
    const MkpInstance& instance, Value k) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  const auto profits = instance.profits();
  // Every profit >= k lands in the class keyed by k, which keeps one item.
  auto kept = keep_per_group<Value>(
      instance.item_count(),
      [&](std::size_t j) { return std::min(profits[j], k); },
      [&](Value p) {
        return static_cast<std::size_t>(p >= k ? 1 : (k + p - 1) / p);
      },
      by_size(instance.sizes()));
  auto reduced = pick_mkp(instance, kept);
  const auto kd = static_cast<double>(k);
  return make_report(std::move(reduced), instance.item_count(),
                     std::move(kept), kd + kd * (std::log(kd) + 1.0), true,
                     "mkp-profit-threshold");
}

namespace {

template <class Instance>
PackingSolution trim_impl(const Instance& instance,
                          const PackingSolution& solution, Value k) {
  if (k < 1) throw ContractError("trim_solution needs k >= 1");
  const auto eval = evaluate(instance, solution);
  if (!eval.feasible) throw ContractError("trim_solution: input is infeasible");
  if (eval.profit < k) {
    throw ContractError("trim_solution: profit " + std::to_string(eval.profit) +
                        " is below k = " + std::to_string(k));
  }
  const auto limit = static_cast<std::size_t>(k);
  if (solution.items.size() <= limit) return solution;

  // Positions in removal order: smallest profit first, later items first.
  std::vector<std::size_t> order(solution.items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Value pa = instance.profit(solution.items[a]);
    const Value pb = instance.profit(solution.items[b]);
    if (pa != pb) return pa < pb;
    return a > b;
  });
  std::vector<bool> drop(solution.items.size(), false);
  for (std::size_t t = 0; t < solution.items.size() - limit; ++t) {
    drop[order[t]] = true;
  }

  PackingSolution out;
  out.kind = solution.kind;
  out.profit = 0;
  for (std::size_t t = 0; t < solution.items.size(); ++t) {
    if (drop[t]) continue;
    out.items.push_back(solution.items[t]);
    if (solution.kind == SolutionKind::kAssignment) {
      out.knapsacks.push_back(solution.knapsacks[t]);
    }
    out.profit += instance.profit(solution.items[t]);
  }
  return out;
}

}  // namespace

PackingSolution trim_solution(const KpInstance& instance,
                              const PackingSolution& solution, Value k) {
  return trim_impl(instance, solution, k);
}

PackingSolution trim_solution(const DkpInstance& instance,
                              const PackingSolution& solution, Value k) {
  return trim_impl(instance, solution, k);
}

PackingSolution trim_solution(const MkpInstance& instance,
                              const PackingSolution& solution, Value k) {
  return trim_impl(instance, solution, k);
}

}  // namespace knapkit
