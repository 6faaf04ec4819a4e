#ifndef KNAPKIT_SRC_SUBSET_MASKS_HPP
#define KNAPKIT_SRC_SUBSET_MASKS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "knapkit/limits.hpp"

namespace knapkit::detail {

using Mask = std::uint64_t;

inline void require_subset_enumeration(std::size_t n,
                                       const SolverLimits& limits,
                                       const std::string& what) {
  if (n > limits.enumeration_cap || n > 62) {
    throw ResourceError(what + ": n = " + std::to_string(n) +
                        " exceeds the subset enumeration cap of " +
                        std::to_string(limits.enumeration_cap));
  }
}

// Lexicographic order on the ascending index lists the masks represent.
inline bool lex_less(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  const int t = std::countr_zero(diff);
  const Mask above = ~Mask{0} << (t + 1);
  if ((a >> t) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

inline std::vector<std::size_t> mask_items(Mask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace knapkit::detail

#endif  // KNAPKIT_SRC_SUBSET_MASKS_HPP
