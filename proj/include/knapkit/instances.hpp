#ifndef KNAPKIT_INSTANCES_HPP
#define KNAPKIT_INSTANCES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "knapkit/errors.hpp"

namespace knapkit {

// Single knapsack: n items with positive profit and size, one capacity.
class KpInstance {
 public:
  KpInstance(std::vector<Value> profits, std::vector<Value> sizes,
             Value capacity);

  std::size_t item_count() const { return profits_.size(); }
  std::span<const Value> profits() const { return profits_; }
  std::span<const Value> sizes() const { return sizes_; }
  Value profit(std::size_t item) const { return profits_[item]; }
  Value size(std::size_t item) const { return sizes_[item]; }
  Value capacity() const { return capacity_; }
  Value total_profit() const { return total_profit_; }
  Value total_size() const { return total_size_; }

  bool operator==(const KpInstance&) const = default;

 private:
  std::vector<Value> profits_;
  std::vector<Value> sizes_;
  Value capacity_;
  Value total_profit_;
  Value total_size_;
};

// d-dimensional knapsack. Sizes are stored dimension-major: size(i, j) is the
// size of item j in dimension i. Zero sizes are allowed as long as every item
// is positive in at least one dimension.
class DkpInstance {
 public:
  DkpInstance(std::vector<Value> profits,
              std::vector<std::vector<Value>> sizes_by_dimension,
              std::vector<Value> capacities);

  std::size_t item_count() const { return profits_.size(); }
  std::size_t dimension_count() const { return capacities_.size(); }
  std::span<const Value> profits() const { return profits_; }
  std::span<const Value> capacities() const { return capacities_; }
  Value profit(std::size_t item) const { return profits_[item]; }
  Value capacity(std::size_t dim) const { return capacities_[dim]; }
  Value size(std::size_t dim, std::size_t item) const {
    return sizes_[dim * profits_.size() + item];
  }
  std::span<const Value> dimension_sizes(std::size_t dim) const {
    return std::span<const Value>(sizes_).subspan(dim * profits_.size(),
                                                  profits_.size());
  }
  std::vector<Value> size_vector(std::size_t item) const;
  std::vector<std::vector<Value>> size_table() const;
  Value total_profit() const { return total_profit_; }

  bool operator==(const DkpInstance&) const = default;

 private:
  std::vector<Value> profits_;
  std::vector<Value> sizes_;
  std::vector<Value> capacities_;
  Value total_profit_;
};

// Multiple knapsack: scalar item sizes, m knapsacks with their own capacity.
class MkpInstance {
 public:
  MkpInstance(std::vector<Value> profits, std::vector<Value> sizes,
              std::vector<Value> capacities);

  std::size_t item_count() const { return profits_.size(); }
  std::size_t knapsack_count() const { return capacities_.size(); }
  std::span<const Value> profits() const { return profits_; }
  std::span<const Value> sizes() const { return sizes_; }
  std::span<const Value> capacities() const { return capacities_; }
  Value profit(std::size_t item) const { return profits_[item]; }
  Value size(std::size_t item) const { return sizes_[item]; }
  Value capacity(std::size_t knapsack) const { return capacities_[knapsack]; }
  Value max_capacity() const;
  Value total_profit() const { return total_profit_; }
  Value total_size() const { return total_size_; }

  bool operator==(const MkpInstance&) const = default;

 private:
  std::vector<Value> profits_;
  std::vector<Value> sizes_;
  std::vector<Value> capacities_;
  Value total_profit_;
  Value total_size_;
};

using AnyInstance = std::variant<KpInstance, DkpInstance, MkpInstance>;

enum class SolutionKind { kSubset, kAssignment };

// A chosen set of items (KP, d-KP) or a partial item -> knapsack assignment
// (MKP). `items` is strictly ascending; for assignments `knapsacks[t]` is the
// knapsack holding `items[t]`.
struct PackingSolution {
  SolutionKind kind = SolutionKind::kSubset;
  std::vector<std::size_t> items;
  std::vector<std::size_t> knapsacks;
  Value profit = 0;

  static PackingSolution subset(std::vector<std::size_t> items, Value profit);
  static PackingSolution assignment(std::vector<std::size_t> items,
                                    std::vector<std::size_t> knapsacks,
                                    Value profit);

  std::size_t item_count() const { return items.size(); }
  bool operator==(const PackingSolution&) const = default;
};

struct Evaluation {
  bool feasible = false;
  Value profit = 0;
};

// Checks every capacity constraint and, for assignments, that no item is
// placed twice. Throws StructuralError on out-of-range indices or a solution
// kind that does not match the instance.
Evaluation evaluate(const KpInstance& instance, const PackingSolution& candidate);
Evaluation evaluate(const DkpInstance& instance, const PackingSolution& candidate);
Evaluation evaluate(const MkpInstance& instance, const PackingSolution& candidate);
Evaluation evaluate(const AnyInstance& instance, const PackingSolution& candidate);

// Binary encoding length 1 + floor(log2 w); the value 0 counts as one bit.
int encoding_length(Value w);

// Instance size |I|: item count plus the encoding length of every number.
Value bit_size(const KpInstance& instance);
Value bit_size(const DkpInstance& instance);
Value bit_size(const MkpInstance& instance);
Value bit_size(const AnyInstance& instance);

enum class Verdict {
  kProceed,        // instance satisfies the standing assumptions
  kTrivialAllFit,  // every remaining item fits at once; OPT = trivial_profit
  kEmpty,          // no item fits anywhere; OPT = 0
};

std::string to_string(Verdict verdict);

template <class Instance>
struct NormalizationOutcome {
  std::optional<Instance> instance;  // absent iff verdict == kEmpty
  Verdict verdict = Verdict::kProceed;
  Value trivial_profit = 0;
  std::vector<std::size_t> kept_items;     // original indices, ascending
  std::vector<std::size_t> removed_items;  // original indices, ascending
  std::vector<std::size_t> kept_knapsacks;  // MKP only, original indices
  std::string note;
};

// Removes items that cannot be packed anywhere and detects the trivial
// all-items-fit case. MKP additionally drops knapsacks smaller than every
// item and, when m > n, the m - n smallest knapsacks.
NormalizationOutcome<KpInstance> normalize(const KpInstance& instance);
NormalizationOutcome<DkpInstance> normalize(const DkpInstance& instance);
NormalizationOutcome<MkpInstance> normalize(const MkpInstance& instance);

// Maps a solution of the normalized instance back to original indices.
template <class Instance>
PackingSolution restore_solution(const NormalizationOutcome<Instance>& outcome,
                                 const PackingSolution& solution) {
  PackingSolution out = solution;
  for (auto& item : out.items) item = outcome.kept_items.at(item);
  if (!outcome.kept_knapsacks.empty()) {
    for (auto& k : out.knapsacks) k = outcome.kept_knapsacks.at(k);
  }
  return out;
}

// Solution for the kTrivialAllFit verdict, in normalized indices.
PackingSolution all_items_solution(const KpInstance& instance);
PackingSolution all_items_solution(const DkpInstance& instance);
PackingSolution all_items_solution(const MkpInstance& instance);

}  // namespace knapkit

#endif  // KNAPKIT_INSTANCES_HPP
