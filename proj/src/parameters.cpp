#include "knapkit/parameters.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace knapkit {

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kKp:
      return "kp";
    case ProblemKind::kDkp:
      return "dkp";
    case ProblemKind::kMkp:
      return "mkp";
  }
  return "unknown";
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kKpDpCapacity:
      return "dp-capacity";
    case Algorithm::kKpDpProfit:
      return "dp-profit";
    case Algorithm::kKpFptasDecision:
      return "fptas-k";
    case Algorithm::kKpBruteForce:
      return "brute";
    case Algorithm::kDkpDp:
      return "dp";
    case Algorithm::kDkpBruteForce:
      return "brute";
    case Algorithm::kDkpXp:
      return "xp-k";
    case Algorithm::kMkpDp:
      return "dp";
    case Algorithm::kMkpPartition:
      return "partition";
    case Algorithm::kMkpAssignment:
      return "assign";
    case Algorithm::kMkpXp:
      return "xp-k";
  }
  return "unknown";
}

namespace {

struct ValueScan {
  int val = 0;
  Value max_val = 0;

  void add(Value w) {
    val = std::max(val, encoding_length(w));
    max_val = std::max(max_val, w);
  }
  void add(std::span<const Value> values) {
    for (Value w : values) add(w);
  }
};

template <class Range>
std::size_t distinct(const Range& values) {
  return std::set<typename Range::value_type>(values.begin(), values.end())
      .size();
}

void fill_common(ParameterProfile& p, std::span<const Value> profits,
                 std::span<const Value> capacities,
                 std::optional<Value> threshold) {
  p.n = profits.size();
  p.threshold = threshold;
  p.capacities.assign(capacities.begin(), capacities.end());
  p.p_max = *std::max_element(profits.begin(), profits.end());
  p.p_min = *std::min_element(profits.begin(), profits.end());
  p.c_max = *std::max_element(capacities.begin(), capacities.end());
  p.c_min = *std::min_element(capacities.begin(), capacities.end());
  p.sum_profits = 0;
  for (Value v : profits) p.sum_profits = checked_add(p.sum_profits, v);
  p.pvar = distinct(std::vector<Value>(profits.begin(), profits.end()));
}

void fill_values(ParameterProfile& p, ValueScan scan,
                 std::span<const Value> profits,
                 std::span<const Value> capacities,
                 std::optional<Value> threshold) {
  scan.add(profits);
  scan.add(capacities);
  if (threshold) scan.add(*threshold);
  p.val = scan.val;
  p.max_val = scan.max_val;
}

}  // namespace

ParameterProfile extract_profile(const KpInstance& instance,
                                 std::optional<Value> threshold) {
  ParameterProfile p;
  p.kind = ProblemKind::kKp;
  const Value capacity = instance.capacity();
  fill_common(p, instance.profits(), std::span<const Value>(&capacity, 1),
              threshold);
  const auto sizes = instance.sizes();
  p.s_max = *std::max_element(sizes.begin(), sizes.end());
  p.s_min = *std::min_element(sizes.begin(), sizes.end());
  p.sum_sizes = instance.total_size();
  p.sizevar = distinct(std::vector<Value>(sizes.begin(), sizes.end()));
  ValueScan scan;
  scan.add(sizes);
  fill_values(p, scan, instance.profits(), std::span<const Value>(&capacity, 1),
              threshold);
  p.bit_size = bit_size(instance);
  return p;
}

ParameterProfile extract_profile(const DkpInstance& instance,
                                 std::optional<Value> threshold) {
  ParameterProfile p;
  p.kind = ProblemKind::kDkp;
  p.d = instance.dimension_count();
  fill_common(p, instance.profits(), instance.capacities(), threshold);
  ValueScan scan;
  p.s_max = instance.size(0, 0);
  p.s_min = instance.size(0, 0);
  for (std::size_t i = 0; i < p.d; ++i) {
    for (Value s : instance.dimension_sizes(i)) {
      p.s_max = std::max(p.s_max, s);
      p.s_min = std::min(p.s_min, s);
      p.sum_sizes = checked_add(p.sum_sizes, s);
      scan.add(s);
    }
  }
  std::set<std::vector<Value>> vectors;
  for (std::size_t j = 0; j < p.n; ++j) vectors.insert(instance.size_vector(j));
  p.sizevar = vectors.size();
  fill_values(p, scan, instance.profits(), instance.capacities(), threshold);
  p.bit_size = bit_size(instance);
  return p;
}

ParameterProfile extract_profile(const MkpInstance& instance,
                                 std::optional<Value> threshold) {
  ParameterProfile p;
  p.kind = ProblemKind::kMkp;
  p.m = instance.knapsack_count();
  fill_common(p, instance.profits(), instance.capacities(), threshold);
  const auto sizes = instance.sizes();
  p.s_max = *std::max_element(sizes.begin(), sizes.end());
  p.s_min = *std::min_element(sizes.begin(), sizes.end());
  p.sum_sizes = instance.total_size();
  p.sizevar = distinct(std::vector<Value>(sizes.begin(), sizes.end()));
  ValueScan scan;
  scan.add(sizes);
  fill_values(p, scan, instance.profits(), instance.capacities(), threshold);
  p.bit_size = bit_size(instance);
  return p;
}

ParameterProfile extract_profile(const AnyInstance& instance,
                                 std::optional<Value> threshold) {
  return std::visit(
      [&](const auto& x) { return extract_profile(x, threshold); }, instance);
}

double bell_estimate(std::size_t n) {
  // B(219) already exceeds the double range.
  if (n > 300) return std::numeric_limits<double>::infinity();
  std::vector<double> bell(n + 1, 0.0);
  bell[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    // Row k-1 of Pascal's triangle, built incrementally.
    double binom = 1.0;
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      total += binom * bell[i];
      binom = binom * static_cast<double>(k - 1 - i) / static_cast<double>(i + 1);
    }
    bell[k] = total;
  }
  return bell[n];
}

std::vector<CostEstimate> candidate_costs(const ParameterProfile& profile) {
  const auto n = static_cast<double>(profile.n);
  const auto d = static_cast<double>(profile.d);
  const auto m = static_cast<double>(profile.m);
  double capacity_product = 1.0;
  for (Value c : profile.capacities) capacity_product *= static_cast<double>(c);
  const std::optional<double> k =
      profile.threshold ? std::optional<double>(static_cast<double>(*profile.threshold))
                        : std::nullopt;

  std::vector<CostEstimate> out;
  switch (profile.kind) {
    case ProblemKind::kKp:
      out.push_back({Algorithm::kKpDpCapacity, n * capacity_product, "c"});
      out.push_back({Algorithm::kKpDpProfit,
                     n * n * static_cast<double>(profile.p_max), "p_max"});
      if (k) out.push_back({Algorithm::kKpFptasDecision, n * n * *k, "k"});
      out.push_back({Algorithm::kKpBruteForce, n * std::exp2(n), "n"});
      break;
    case ProblemKind::kDkp:
      out.push_back({Algorithm::kDkpDp, d * n * capacity_product, "capacities"});
      if (k) out.push_back({Algorithm::kDkpXp, d * std::pow(n, *k + 1.0), "k"});
      out.push_back({Algorithm::kDkpBruteForce, d * n * std::exp2(n), "n"});
      break;
    case ProblemKind::kMkp: {
      const double matching = m * std::log2(m) + n;
      out.push_back({Algorithm::kMkpDp, n * m * capacity_product, "capacities"});
      if (k) {
        const double bell =
            bell_estimate(static_cast<std::size_t>(std::min(*k + 1.0, 400.0)));
        out.push_back({Algorithm::kMkpXp, std::pow(n, *k) * bell * matching, "k"});
      }
      out.push_back({Algorithm::kMkpPartition,
                     bell_estimate(profile.n) * matching, "n"});
      out.push_back({Algorithm::kMkpAssignment, n * m * std::exp2(n * m), "m,n"});
      break;
    }
  }
  return out;
}

SolverPlan plan_solver(const ParameterProfile& profile) {
  const auto costs = candidate_costs(profile);
  auto best = costs.begin();
  for (auto it = costs.begin(); it != costs.end(); ++it) {
    if (it->cost < best->cost) best = it;
  }
  return {best->algorithm, best->cost, best->rationale};
}

}  // namespace knapkit
