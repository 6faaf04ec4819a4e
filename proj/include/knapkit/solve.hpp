#ifndef KNAPKIT_SOLVE_HPP
#define KNAPKIT_SOLVE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"
#include "knapkit/kp_solvers.hpp"
#include "knapkit/limits.hpp"
#include "knapkit/parameters.hpp"

namespace knapkit {

ProblemKind kind_of(const AnyInstance& instance);

// Optimization algorithms accepted by solve_instance for a problem kind, in
// the CLI spelling. "auto" is always accepted as well.
std::vector<std::string> solve_algorithms(ProblemKind kind);
// Decision strategies accepted by decide_instance.
std::vector<std::string> decide_strategies(ProblemKind kind);

struct SolveOptions {
  std::string algorithm = "auto";
  double epsilon = 0.1;
  SolverLimits limits;
};

struct SolveOutcome {
  PackingSolution solution;  // original item / knapsack indices
  std::string method;
  Verdict verdict = Verdict::kProceed;
  std::int64_t elapsed_ns = 0;  // solver call only
  std::uint64_t cells = 0;      // DP cells the solver allocated
};

// normalize -> solve -> map back to original indices. Trivial verdicts are
// answered without calling a solver.
SolveOutcome solve_instance(const AnyInstance& instance,
                            const SolveOptions& options);

// Same pipeline for "OPT >= k?"; a yes-witness is trimmed to at most k items.
DecisionResult decide_instance(const AnyInstance& instance, Value k,
                               const std::string& strategy,
                               const SolverLimits& limits = {});

// DP table cells the named algorithm allocates on this instance (0 for
// enumeration), matching the solvers' resource guards.
std::uint64_t table_cells(const AnyInstance& instance,
                          const std::string& algorithm, double epsilon = 0.1);

}  // namespace knapkit

#endif  // KNAPKIT_SOLVE_HPP
