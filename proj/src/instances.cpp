#include "knapkit/instances.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "knapkit/limits.hpp"

namespace knapkit {

namespace {

Value checked_sum(std::span<const Value> values) {
  Value total = 0;
  for (Value v : values) total = checked_add(total, v);
  return total;
}

void require_positive(std::span<const Value> values, const char* what) {
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] < 1) {
      throw ArgumentError(std::string(what) + "[" + std::to_string(j) +
                          "] must be a positive integer, got " +
                          std::to_string(values[j]));
    }
  }
}

void require_same_length(std::size_t profits, std::size_t sizes) {
  if (profits != sizes) {
    throw ArgumentError("profits and sizes differ in length (" +
                        std::to_string(profits) + " vs " +
                        std::to_string(sizes) + ")");
  }
  if (profits == 0) throw ArgumentError("instance needs at least one item");
}

void check_item_range(const PackingSolution& candidate, std::size_t n) {
  for (std::size_t item : candidate.items) {
    if (item >= n) {
      throw StructuralError("item index " + std::to_string(item) +
                            " out of range for " + std::to_string(n) +
                            " items");
    }
  }
}

// Duplicates are legal input to evaluate() and make the candidate infeasible.
bool has_duplicates(std::vector<std::size_t> items) {
  std::sort(items.begin(), items.end());
  return std::adjacent_find(items.begin(), items.end()) != items.end();
}

template <class Instance>
Value profit_of(const Instance& instance, const PackingSolution& candidate) {
  Value total = 0;
  for (std::size_t item : candidate.items) {
    total = checked_add(total, instance.profit(item));
  }
  return total;
}

void require_subset(const PackingSolution& candidate, const char* problem) {
  if (candidate.kind != SolutionKind::kSubset) {
    throw StructuralError(std::string(problem) +
                          " solutions must be item subsets");
  }
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  std::iota(out.begin(), out.end(), std::size_t{0});
  return out;
}

}  // namespace

void require_cells(std::uint64_t cells, const SolverLimits& limits,
                   const std::string& what) {
  if (cells > limits.memory_ceiling) {
    throw ResourceError(what + " needs " + std::to_string(cells) +
                        " table cells, above the ceiling of " +
                        std::to_string(limits.memory_ceiling));
  }
}

void require_enumeration(std::uint64_t candidates, const SolverLimits& limits,
                         const std::string& what) {
  if (candidates > limits.enumeration_budget) {
    throw ResourceError(what + " would visit " + std::to_string(candidates) +
                        " candidates, above the budget of " +
                        std::to_string(limits.enumeration_budget));
  }
}

KpInstance::KpInstance(std::vector<Value> profits, std::vector<Value> sizes,
                       Value capacity)
    : profits_(std::move(profits)),
      sizes_(std::move(sizes)),
      capacity_(capacity) {
  require_same_length(profits_.size(), sizes_.size());
  require_positive(profits_, "profit");
  require_positive(sizes_, "size");
  if (capacity_ < 1) throw ArgumentError("capacity must be positive");
  total_profit_ = checked_sum(profits_);
  total_size_ = checked_sum(sizes_);
}

DkpInstance::DkpInstance(std::vector<Value> profits,
                         std::vector<std::vector<Value>> sizes_by_dimension,
                         std::vector<Value> capacities)
    : profits_(std::move(profits)), capacities_(std::move(capacities)) {
  const std::size_t n = profits_.size();
  if (n == 0) throw ArgumentError("instance needs at least one item");
  if (capacities_.empty()) throw ArgumentError("d-KP needs d >= 1");
  if (sizes_by_dimension.size() != capacities_.size()) {
    throw ArgumentError("size table has " +
                        std::to_string(sizes_by_dimension.size()) +
                        " rows but there are " +
                        std::to_string(capacities_.size()) + " capacities");
  }
  require_positive(profits_, "profit");
  require_positive(capacities_, "capacity");
  sizes_.reserve(n * capacities_.size());
  for (std::size_t i = 0; i < sizes_by_dimension.size(); ++i) {
    const auto& row = sizes_by_dimension[i];
    if (row.size() != n) {
      throw ArgumentError("size row " + std::to_string(i) + " has " +
                          std::to_string(row.size()) + " entries, expected " +
                          std::to_string(n));
    }
    for (Value s : row) {
      if (s < 0) throw ArgumentError("d-KP sizes must be non-negative");
    }
    checked_sum(row);
    sizes_.insert(sizes_.end(), row.begin(), row.end());
  }
  for (std::size_t j = 0; j < n; ++j) {
    Value column = 0;
    for (std::size_t i = 0; i < capacities_.size(); ++i) {
      column = checked_add(column, size(i, j));
    }
    if (column < 1) {
      throw ArgumentError("item " + std::to_string(j) +
                          " has size 0 in every dimension");
    }
  }
  total_profit_ = checked_sum(profits_);
}

std::vector<Value> DkpInstance::size_vector(std::size_t item) const {
  std::vector<Value> out(dimension_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = size(i, item);
  return out;
}

std::vector<std::vector<Value>> DkpInstance::size_table() const {
  std::vector<std::vector<Value>> out;
  out.reserve(dimension_count());
  for (std::size_t i = 0; i < dimension_count(); ++i) {
    auto row = dimension_sizes(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

MkpInstance::MkpInstance(std::vector<Value> profits, std::vector<Value> sizes,
                         std::vector<Value> capacities)
    : profits_(std::move(profits)),
      sizes_(std::move(sizes)),
      capacities_(std::move(capacities)) {
  require_same_length(profits_.size(), sizes_.size());
  if (capacities_.empty()) throw ArgumentError("MKP needs m >= 1 knapsacks");
  require_positive(profits_, "profit");
  require_positive(sizes_, "size");
  require_positive(capacities_, "capacity");
  total_profit_ = checked_sum(profits_);
  total_size_ = checked_sum(sizes_);
  checked_sum(capacities_);
}

Value MkpInstance::max_capacity() const {
  return *std::max_element(capacities_.begin(), capacities_.end());
}

PackingSolution PackingSolution::subset(std::vector<std::size_t> items,
                                        Value profit) {
  std::sort(items.begin(), items.end());
  PackingSolution out;
  out.kind = SolutionKind::kSubset;
  out.items = std::move(items);
  out.profit = profit;
  return out;
}

PackingSolution PackingSolution::assignment(std::vector<std::size_t> items,
                                            std::vector<std::size_t> knapsacks,
                                            Value profit) {
  if (items.size() != knapsacks.size()) {
    throw StructuralError("assignment needs one knapsack per item");
  }
  std::vector<std::size_t> order = iota_indices(items.size());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a] < items[b];
  });
  PackingSolution out;
  out.kind = SolutionKind::kAssignment;
  out.profit = profit;
  for (std::size_t t : order) {
    out.items.push_back(items[t]);
    out.knapsacks.push_back(knapsacks[t]);
  }
  return out;
}

Evaluation evaluate(const KpInstance& instance,
                    const PackingSolution& candidate) {
  require_subset(candidate, "KP");
  check_item_range(candidate, instance.item_count());
  Value load = 0;
  for (std::size_t item : candidate.items) {
    load = checked_add(load, instance.size(item));
  }
  return {load <= instance.capacity() && !has_duplicates(candidate.items),
          profit_of(instance, candidate)};
}

Evaluation evaluate(const DkpInstance& instance,
                    const PackingSolution& candidate) {
  require_subset(candidate, "d-KP");
  check_item_range(candidate, instance.item_count());
  bool feasible = !has_duplicates(candidate.items);
  for (std::size_t i = 0; i < instance.dimension_count(); ++i) {
    Value load = 0;
    for (std::size_t item : candidate.items) {
      load = checked_add(load, instance.size(i, item));
    }
    feasible = feasible && load <= instance.capacity(i);
  }
  return {feasible, profit_of(instance, candidate)};
}

Evaluation evaluate(const MkpInstance& instance,
                    const PackingSolution& candidate) {
  if (candidate.kind != SolutionKind::kAssignment) {
    throw StructuralError("MKP solutions must be item assignments");
  }
  if (candidate.knapsacks.size() != candidate.items.size()) {
    throw StructuralError("assignment needs one knapsack per item");
  }
  check_item_range(candidate, instance.item_count());
  std::vector<Value> load(instance.knapsack_count(), 0);
  for (std::size_t t = 0; t < candidate.items.size(); ++t) {
    const std::size_t k = candidate.knapsacks[t];
    if (k >= instance.knapsack_count()) {
      throw StructuralError("knapsack index " + std::to_string(k) +
                            " out of range for " +
                            std::to_string(instance.knapsack_count()) +
                            " knapsacks");
    }
    load[k] = checked_add(load[k], instance.size(candidate.items[t]));
  }
  bool feasible = !has_duplicates(candidate.items);
  for (std::size_t k = 0; k < load.size(); ++k) {
    feasible = feasible && load[k] <= instance.capacity(k);
  }
  return {feasible, profit_of(instance, candidate)};
}

Evaluation evaluate(const AnyInstance& instance,
                    const PackingSolution& candidate) {
  return std::visit([&](const auto& x) { return evaluate(x, candidate); },
                    instance);
}

int encoding_length(Value w) {
  if (w <= 0) return 1;
  return std::bit_width(static_cast<std::uint64_t>(w));
}

namespace {

Value encoded_sum(std::span<const Value> values) {
  Value total = 0;
  for (Value v : values) total += encoding_length(v);
  return total;
}

}  // namespace

Value bit_size(const KpInstance& instance) {
  return static_cast<Value>(instance.item_count()) +
         encoded_sum(instance.profits()) + encoded_sum(instance.sizes()) +
         encoding_length(instance.capacity());
}

Value bit_size(const DkpInstance& instance) {
  Value total = static_cast<Value>(instance.item_count()) +
                encoded_sum(instance.profits()) +
                encoded_sum(instance.capacities());
  for (std::size_t i = 0; i < instance.dimension_count(); ++i) {
    total += encoded_sum(instance.dimension_sizes(i));
  }
  return total;
}

Value bit_size(const MkpInstance& instance) {
  return static_cast<Value>(instance.item_count()) +
         encoded_sum(instance.profits()) + encoded_sum(instance.sizes()) +
         encoded_sum(instance.capacities());
}

Value bit_size(const AnyInstance& instance) {
  return std::visit([](const auto& x) { return bit_size(x); }, instance);
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kProceed:
      return "proceed";
    case Verdict::kTrivialAllFit:
      return "trivial-all-fit";
    case Verdict::kEmpty:
      return "empty";
  }
  return "unknown";
}

namespace {

template <class Instance>
void split_items(NormalizationOutcome<Instance>& outcome, std::size_t n,
                 auto&& fits) {
  for (std::size_t j = 0; j < n; ++j) {
    (fits(j) ? outcome.kept_items : outcome.removed_items).push_back(j);
  }
}

template <class T>
std::vector<T> pick(std::span<const T> values,
                    const std::vector<std::size_t>& indices) {
  std::vector<T> out;
  out.reserve(indices.size());
  for (std::size_t j : indices) out.push_back(values[j]);
  return out;
}

}  // namespace

NormalizationOutcome<KpInstance> normalize(const KpInstance& instance) {
  NormalizationOutcome<KpInstance> out;
  split_items(out, instance.item_count(), [&](std::size_t j) {
    return instance.size(j) <= instance.capacity();
  });
  if (out.kept_items.empty()) {
    out.verdict = Verdict::kEmpty;
    out.note = "no item fits the knapsack; OPT = 0";
    return out;
  }
  out.instance.emplace(pick(instance.profits(), out.kept_items),
                       pick(instance.sizes(), out.kept_items),
                       instance.capacity());
  if (out.instance->total_size() <= instance.capacity()) {
    out.verdict = Verdict::kTrivialAllFit;
    out.trivial_profit = out.instance->total_profit();
  }
  return out;
}

NormalizationOutcome<DkpInstance> normalize(const DkpInstance& instance) {
  const std::size_t d = instance.dimension_count();
  NormalizationOutcome<DkpInstance> out;
  split_items(out, instance.item_count(), [&](std::size_t j) {
    for (std::size_t i = 0; i < d; ++i) {
      if (instance.size(i, j) > instance.capacity(i)) return false;
    }
    return true;
  });
  if (out.kept_items.empty()) {
    out.verdict = Verdict::kEmpty;
    out.note = "no item fits in every dimension; OPT = 0";
    return out;
  }
  std::vector<std::vector<Value>> table(d);
  bool all_fit = true;
  for (std::size_t i = 0; i < d; ++i) {
    table[i] = pick(instance.dimension_sizes(i), out.kept_items);
    Value load = 0;
    for (Value s : table[i]) load = checked_add(load, s);
    all_fit = all_fit && load <= instance.capacity(i);
  }
  out.instance.emplace(
      pick(instance.profits(), out.kept_items), std::move(table),
      std::vector<Value>(instance.capacities().begin(),
                         instance.capacities().end()));
  if (all_fit) {
    out.verdict = Verdict::kTrivialAllFit;
    out.trivial_profit = out.instance->total_profit();
  }
  return out;
}

NormalizationOutcome<MkpInstance> normalize(const MkpInstance& instance) {
  NormalizationOutcome<MkpInstance> out;
  const Value c_max = instance.max_capacity();
  split_items(out, instance.item_count(),
              [&](std::size_t j) { return instance.size(j) <= c_max; });
  if (out.kept_items.empty()) {
    out.verdict = Verdict::kEmpty;
    out.note = "no item fits any knapsack; OPT = 0";
    return out;
  }
  const auto sizes = pick(instance.sizes(), out.kept_items);
  const Value s_min = *std::min_element(sizes.begin(), sizes.end());

  // Knapsacks below s_min can never hold anything.
  std::vector<std::size_t> bins;
  for (std::size_t k = 0; k < instance.knapsack_count(); ++k) {
    if (instance.capacity(k) >= s_min) bins.push_back(k);
  }
  // With m > n only the n largest knapsacks can be used; ties keep the lower
  // index.
  if (bins.size() > out.kept_items.size()) {
    std::stable_sort(bins.begin(), bins.end(), [&](std::size_t a, std::size_t b) {
      return instance.capacity(a) > instance.capacity(b);
    });
    bins.resize(out.kept_items.size());
    std::sort(bins.begin(), bins.end());
  }
  out.kept_knapsacks = bins;
  out.instance.emplace(pick(instance.profits(), out.kept_items), sizes,
                       pick(instance.capacities(), bins));
  if (out.instance->total_size() <= out.instance->max_capacity()) {
    out.verdict = Verdict::kTrivialAllFit;
    out.trivial_profit = out.instance->total_profit();
  }
  return out;
}

PackingSolution all_items_solution(const KpInstance& instance) {
  return PackingSolution::subset(iota_indices(instance.item_count()),
                                 instance.total_profit());
}

PackingSolution all_items_solution(const DkpInstance& instance) {
  return PackingSolution::subset(iota_indices(instance.item_count()),
                                 instance.total_profit());
}

PackingSolution all_items_solution(const MkpInstance& instance) {
  const auto caps = instance.capacities();
  const auto largest = static_cast<std::size_t>(
      std::max_element(caps.begin(), caps.end()) - caps.begin());
  return PackingSolution::assignment(
      iota_indices(instance.item_count()),
      std::vector<std::size_t>(instance.item_count(), largest),
      instance.total_profit());
}

}  // namespace knapkit
