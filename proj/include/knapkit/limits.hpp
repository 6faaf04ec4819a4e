#ifndef KNAPKIT_LIMITS_HPP
#define KNAPKIT_LIMITS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace knapkit {

// Ceilings shared by every solver. Exceeding one raises ResourceError before
// any allocation or enumeration starts.
struct SolverLimits {
  // DP table cells, counting one cell per (item, capacity) choice entry.
  std::uint64_t memory_ceiling = std::uint64_t{1} << 31;
  // Largest n accepted by plain 2^n subset enumeration.
  std::size_t enumeration_cap = 25;
  // Candidate subsets / assignments visited by XP and assignment searches.
  std::uint64_t enumeration_budget = 100'000'000;
  // Largest ground set for set-partition enumeration.
  std::size_t partition_cap = 12;
};

void require_cells(std::uint64_t cells, const SolverLimits& limits,
                   const std::string& what);
void require_enumeration(std::uint64_t candidates, const SolverLimits& limits,
                         const std::string& what);

}  // namespace knapkit

#endif  // KNAPKIT_LIMITS_HPP
