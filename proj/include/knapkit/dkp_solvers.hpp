#ifndef KNAPKIT_DKP_SOLVERS_HPP
#define KNAPKIT_DKP_SOLVERS_HPP

#include <string>

#include "knapkit/instances.hpp"
#include "knapkit/kp_solvers.hpp"
#include "knapkit/limits.hpp"

namespace knapkit {

// DP over the grid of residual-capacity tuples, prod(c_i + 1) states.
PackingSolution dkp_dp(const DkpInstance& instance,
                       const SolverLimits& limits = {});

// All 2^n subsets; ties resolve to the lexicographically smallest subset.
PackingSolution dkp_bruteforce(const DkpInstance& instance,
                               const SolverLimits& limits = {});

// "OPT >= k?" by trying every subset of at most k items, smallest
// cardinality first. Any profit-k solution can be trimmed to k items, so the
// search is exact.
DecisionResult dkp_decide_xp(const DkpInstance& instance, Value k,
                             const SolverLimits& limits = {});

// Adds one dimension in which every item has size 1 and the capacity is n.
// The new constraint is never binding, so every decision answer is kept.
DkpInstance dkp_lift_dimension(const DkpInstance& instance);

enum class DkpStrategy { kAuto, kDp, kBrute, kXpK };

std::string to_string(DkpStrategy strategy);
DkpStrategy parse_dkp_strategy(const std::string& name);

DecisionResult dkp_decide(const DkpInstance& instance, Value k,
                          DkpStrategy strategy = DkpStrategy::kAuto,
                          const SolverLimits& limits = {});

}  // namespace knapkit

#endif  // KNAPKIT_DKP_SOLVERS_HPP
