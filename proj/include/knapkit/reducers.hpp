#ifndef KNAPKIT_REDUCERS_HPP
#define KNAPKIT_REDUCERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"

namespace knapkit {

// Result of an OPT-preserving item reduction. The reduced instance keeps the
// surviving items in their original relative order.
template <class Instance>
struct ReductionReport {
  Instance instance;
  std::vector<std::size_t> kept_items;     // input indices, ascending
  std::vector<std::size_t> removed_items;  // input indices, ascending
  double bound = 0.0;         // closed-form item bound evaluated on the input
  bool bound_strict = true;   // whether the bound is a strict inequality
  std::size_t achieved = 0;   // item count after reduction
  std::string rule;

  bool within_bound() const {
    const auto n = static_cast<double>(achieved);
    return bound_strict ? n < bound : n <= bound;
  }
};

// Keeps at most floor(c / s) items of each size s, the most profitable ones.
// Afterwards n < c (ln c + 1) for c >= 2 and n <= 1 for c = 1.
ReductionReport<KpInstance> reduce_kp_by_capacity(const KpInstance& instance);

// Groups items by size vector and keeps at most
// min_{i : s_i > 0} floor(c_i / s_i) of each, the most profitable ones.
// Afterwards n <= c_min (prod(c_i + 1) - 1).
ReductionReport<DkpInstance> reduce_dkp_by_size_vectors(
    const DkpInstance& instance);

// Treats all knapsacks as one of capacity C = sum c_i: drops items larger
// than c_max, then keeps at most floor(C / s) items of each size s.
// Afterwards n < C (ln c_max + 1) for c_max >= 2.
ReductionReport<MkpInstance> reduce_mkp_by_capacity_sum(
    const MkpInstance& instance);

// Keeps the answer to "OPT >= k?" but not necessarily OPT. Items with
// profit >= k collapse to the single smallest one; every other profit class
// p keeps its ceil(k / p) smallest items. Afterwards n < k + k (ln k + 1).
ReductionReport<MkpInstance> reduce_mkp_by_profit_threshold(
    const MkpInstance& instance, Value k);

// Drops smallest-profit items from a feasible solution of profit >= k until
// at most k items remain. Profit stays >= k because every profit is >= 1.
// Throws ContractError when the input is infeasible or below k.
PackingSolution trim_solution(const KpInstance& instance,
                              const PackingSolution& solution, Value k);
PackingSolution trim_solution(const DkpInstance& instance,
                              const PackingSolution& solution, Value k);
PackingSolution trim_solution(const MkpInstance& instance,
                              const PackingSolution& solution, Value k);

}  // namespace knapkit

#endif  // KNAPKIT_REDUCERS_HPP
