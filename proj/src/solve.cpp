#include "knapkit/solve.hpp"

#include <algorithm>
#include <chrono>

#include "knapkit/dkp_solvers.hpp"
#include "knapkit/mkp_solvers.hpp"
#include "knapkit/reducers.hpp"
#include "tables.hpp"

namespace knapkit {

ProblemKind kind_of(const AnyInstance& instance) {
  switch (instance.index()) {
    case 0:
      return ProblemKind::kKp;
    case 1:
      return ProblemKind::kDkp;
    default:
      return ProblemKind::kMkp;
  }
}

std::vector<std::string> solve_algorithms(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kKp:
      return {"auto", "dp-capacity", "dp-profit", "brute", "fptas"};
    case ProblemKind::kDkp:
      return {"auto", "dp", "brute"};
    case ProblemKind::kMkp:
      return {"auto", "dp", "partition", "assign"};
  }
  return {};
}

std::vector<std::string> decide_strategies(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kKp:
      return {"auto", "dp-capacity", "dp-profit", "fptas-k", "brute"};
    case ProblemKind::kDkp:
      return {"auto", "dp", "brute", "xp-k"};
    case ProblemKind::kMkp:
      return {"auto", "dp", "partition", "assign", "xp-k"};
  }
  return {};
}

namespace {

void require_known(const std::vector<std::string>& names,
                   const std::string& name, ProblemKind kind) {
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw ArgumentError("unknown algorithm '" + name + "' for " +
                        to_string(kind) + " (expected one of: " + list + ")");
  }
}

std::uint64_t grid_cells(std::size_t n, std::span<const Value> capacities) {
  return saturating_mul(n, detail::CapacityGrid(capacities).cells());
}

// Resolves "auto" to a concrete optimization algorithm name.
std::string resolve(const AnyInstance& instance, const std::string& algorithm) {
  if (algorithm != "auto") return algorithm;
  const auto plan = plan_solver(extract_profile(instance));
  switch (plan.algorithm) {
    case Algorithm::kKpDpProfit:
      return "dp-profit";
    case Algorithm::kKpBruteForce:
      return "brute";
    case Algorithm::kDkpBruteForce:
      return "brute";
    case Algorithm::kMkpPartition:
      return "partition";
    case Algorithm::kMkpAssignment:
      return "assign";
    case Algorithm::kDkpDp:
    case Algorithm::kMkpDp:
      return "dp";
    default:
      return "dp-capacity";
  }
}

PackingSolution run(const KpInstance& x, const std::string& algorithm,
                    const SolveOptions& options) {
  if (algorithm == "dp-capacity") return kp_dp_capacity(x, options.limits);
  if (algorithm == "dp-profit") return kp_dp_profit(x, std::nullopt, options.limits);
  if (algorithm == "brute") return kp_bruteforce(x, options.limits);
  return kp_fptas(x, options.epsilon, options.limits);
}

PackingSolution run(const DkpInstance& x, const std::string& algorithm,
                    const SolveOptions& options) {
  if (algorithm == "dp") return dkp_dp(x, options.limits);
  return dkp_bruteforce(x, options.limits);
}

PackingSolution run(const MkpInstance& x, const std::string& algorithm,
                    const SolveOptions& options) {
  if (algorithm == "dp") return mkp_dp(x, options.limits);
  if (algorithm == "partition") return mkp_partition_solve(x, options.limits);
  return mkp_assignment_bruteforce(x, options.limits);
}

template <class Instance>
SolveOutcome solve_typed(const Instance& instance, const SolveOptions& options) {
  const auto normalized = normalize(instance);
  SolveOutcome out;
  out.verdict = normalized.verdict;
  if (normalized.verdict == Verdict::kEmpty) {
    out.method = "normalize:empty";
    if constexpr (std::is_same_v<Instance, MkpInstance>) {
      out.solution = PackingSolution::assignment({}, {}, 0);
    } else {
      out.solution = PackingSolution::subset({}, 0);
    }
    return out;
  }
  const Instance& reduced = *normalized.instance;
  if (normalized.verdict == Verdict::kTrivialAllFit) {
    out.method = "normalize:all-fit";
    out.solution = restore_solution(normalized, all_items_solution(reduced));
    return out;
  }
  const std::string algorithm = resolve(reduced, options.algorithm);
  out.method = options.algorithm == "auto" ? "auto:" + algorithm : algorithm;
  out.cells = table_cells(reduced, algorithm, options.epsilon);

  const auto start = std::chrono::steady_clock::now();
  auto solution = run(reduced, algorithm, options);
  const auto stop = std::chrono::steady_clock::now();
  out.elapsed_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  out.solution = restore_solution(normalized, solution);
  return out;
}

template <class Instance, class Decide>
DecisionResult decide_typed(const Instance& instance, Value k, Decide&& decide) {
  if (k < 1) throw ArgumentError("threshold k must be at least 1");
  const auto normalized = normalize(instance);
  if (normalized.verdict == Verdict::kEmpty) {
    return {false, std::nullopt, "normalize:empty"};
  }
  const Instance& reduced = *normalized.instance;
  DecisionResult result;
  if (normalized.verdict == Verdict::kTrivialAllFit) {
    result.method = "normalize:all-fit";
    result.answer = normalized.trivial_profit >= k;
    if (result.answer) result.witness = all_items_solution(reduced);
  } else {
    result = decide(reduced);
  }
  if (result.witness) {
    result.witness =
        restore_solution(normalized, trim_solution(reduced, *result.witness, k));
  }
  return result;
}

}  // namespace

SolveOutcome solve_instance(const AnyInstance& instance,
                            const SolveOptions& options) {
  require_known(solve_algorithms(kind_of(instance)), options.algorithm,
                kind_of(instance));
  return std::visit([&](const auto& x) { return solve_typed(x, options); },
                    instance);
}

DecisionResult decide_instance(const AnyInstance& instance, Value k,
                               const std::string& strategy,
                               const SolverLimits& limits) {
  const auto kind = kind_of(instance);
  require_known(decide_strategies(kind), strategy, kind);
  return std::visit(
      [&](const auto& x) -> DecisionResult {
        using T = std::decay_t<decltype(x)>;
        return decide_typed(x, k, [&](const T& reduced) {
          if constexpr (std::is_same_v<T, KpInstance>) {
            return kp_decide(reduced, k, parse_kp_strategy(strategy), limits);
          } else if constexpr (std::is_same_v<T, DkpInstance>) {
            return dkp_decide(reduced, k, parse_dkp_strategy(strategy), limits);
          } else {
            return mkp_decide(reduced, k, parse_mkp_strategy(strategy), limits);
          }
        });
      },
      instance);
}

std::uint64_t table_cells(const AnyInstance& instance,
                          const std::string& algorithm, double epsilon) {
  const std::string name = resolve(instance, algorithm);
  return std::visit(
      [&](const auto& x) -> std::uint64_t {
        using T = std::decay_t<decltype(x)>;
        const std::size_t n = x.item_count();
        if constexpr (std::is_same_v<T, KpInstance>) {
          if (name == "dp-capacity") {
            return saturating_mul(n, static_cast<std::uint64_t>(x.capacity()) + 1);
          }
          Value bound = x.total_profit();
          if (name == "fptas") {
            const double scale = fptas_scale(x, epsilon);
            if (scale == 0.0) return 0;
            if (scale > 1.0) {
              bound = 0;
              for (Value p : scaled_profits(x, scale)) bound += p;
            }
          } else if (name != "dp-profit") {
            return 0;
          }
          return saturating_mul(n, static_cast<std::uint64_t>(bound) + 1);
        } else {
          if (name != "dp") return 0;
          return grid_cells(n, x.capacities());
        }
      },
      instance);
}

}  // namespace knapkit
