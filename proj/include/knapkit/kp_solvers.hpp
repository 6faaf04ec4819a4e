#ifndef KNAPKIT_KP_SOLVERS_HPP
#define KNAPKIT_KP_SOLVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"
#include "knapkit/limits.hpp"

namespace knapkit {

struct DecisionResult {
  bool answer = false;
  std::optional<PackingSolution> witness;  // present iff answer
  std::string method;
};

// O(n * c) table over residual capacity. Exact.
PackingSolution kp_dp_capacity(const KpInstance& instance,
                               const SolverLimits& limits = {});

// O(n * U) table over profit levels holding the minimum size that reaches
// each level. U defaults to the total profit; profit levels above U are not
// explored, so the result is exact whenever U >= OPT.
PackingSolution kp_dp_profit(const KpInstance& instance,
                             std::optional<Value> upper_bound = std::nullopt,
                             const SolverLimits& limits = {});

// Checks all 2^n subsets. Exact; n limited by limits.enumeration_cap.
PackingSolution kp_bruteforce(const KpInstance& instance,
                              const SolverLimits& limits = {});

// Profit-scaling approximation scheme. For 0 < epsilon < 1 the returned
// profit A satisfies A <= OPT <= (1 + epsilon) * A.
PackingSolution kp_fptas(const KpInstance& instance, double epsilon,
                         const SolverLimits& limits = {});

// Profit scaling factor kp_fptas uses; values <= 1 mean it runs the exact
// profit DP. Returns 0 when no item fits.
double fptas_scale(const KpInstance& instance, double epsilon);

// Profits after scaling by `scale`: max(1, floor(p / scale)).
std::vector<Value> scaled_profits(const KpInstance& instance, double scale);

enum class KpStrategy { kAuto, kDpCapacity, kDpProfit, kFptasK, kBrute };

std::string to_string(KpStrategy strategy);
KpStrategy parse_kp_strategy(const std::string& name);

// Exact answer to "OPT >= k?". The fptas-k route runs the approximation
// scheme with epsilon = 1/(2k), which is exact for integer profits.
DecisionResult kp_decide(const KpInstance& instance, Value k,
                         KpStrategy strategy = KpStrategy::kAuto,
                         const SolverLimits& limits = {});

}  // namespace knapkit

#endif  // KNAPKIT_KP_SOLVERS_HPP
