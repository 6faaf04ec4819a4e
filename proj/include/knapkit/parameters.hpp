#ifndef KNAPKIT_PARAMETERS_HPP
#define KNAPKIT_PARAMETERS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"

namespace knapkit {

enum class ProblemKind { kKp, kDkp, kMkp };

std::string to_string(ProblemKind kind);

// Every structural parameter of one instance. For d-KP the size fields range
// over all entries s_{i,j}; sizevar counts distinct size vectors.
struct ParameterProfile {
  ProblemKind kind = ProblemKind::kKp;
  std::size_t n = 0;
  std::size_t d = 1;
  std::size_t m = 1;
  std::optional<Value> threshold;
  std::vector<Value> capacities;
  Value p_max = 0;
  Value p_min = 0;
  Value s_max = 0;
  Value s_min = 0;
  Value c_max = 0;
  Value c_min = 0;
  Value sum_profits = 0;
  Value sum_sizes = 0;
  int val = 0;        // longest binary encoding of any number, in bits
  Value max_val = 0;  // largest number occurring in the instance
  std::size_t sizevar = 0;
  std::size_t pvar = 0;
  Value bit_size = 0;

  bool operator==(const ParameterProfile&) const = default;
};

ParameterProfile extract_profile(const KpInstance& instance,
                                 std::optional<Value> threshold = std::nullopt);
ParameterProfile extract_profile(const DkpInstance& instance,
                                 std::optional<Value> threshold = std::nullopt);
ParameterProfile extract_profile(const MkpInstance& instance,
                                 std::optional<Value> threshold = std::nullopt);
ParameterProfile extract_profile(const AnyInstance& instance,
                                 std::optional<Value> threshold = std::nullopt);

enum class Algorithm {
  kKpDpCapacity,
  kKpDpProfit,
  kKpFptasDecision,
  kKpBruteForce,
  kDkpDp,
  kDkpBruteForce,
  kDkpXp,
  kMkpDp,
  kMkpPartition,
  kMkpAssignment,
  kMkpXp,
};

// CLI name of the algorithm ("dp-capacity", "partition", ...).
std::string to_string(Algorithm algorithm);

struct SolverPlan {
  Algorithm algorithm = Algorithm::kKpDpCapacity;
  double predicted_cost = 0.0;
  std::string rationale;  // parameter the winning cost formula depends on

  bool operator==(const SolverPlan&) const = default;
};

struct CostEstimate {
  Algorithm algorithm;
  double cost;
  std::string rationale;
};

// Running-time formulas with unit constants, in tie-break priority order:
// capacity DP, profit DP, threshold routes, then enumeration. Algorithms that
// need a threshold are listed only when the profile carries one.
std::vector<CostEstimate> candidate_costs(const ParameterProfile& profile);

// Cheapest candidate; the earliest in priority order wins ties.
SolverPlan plan_solver(const ParameterProfile& profile);

// Bell number B(n) as a double, from B(n) = sum_i C(n-1, i) B(i).
double bell_estimate(std::size_t n);

}  // namespace knapkit

#endif  // KNAPKIT_PARAMETERS_HPP
