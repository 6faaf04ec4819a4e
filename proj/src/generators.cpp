#include "knapkit/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace knapkit {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw ArgumentError("self-loop at vertex " + std::to_string(u + 1));
    }
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw ArgumentError("edge endpoint outside 1.." +
                          std::to_string(vertex_count_));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw ArgumentError("duplicate edge {" + std::to_string(u + 1) + "," +
                          std::to_string(v + 1) + "}");
    }
  }
}

Graph figure_one_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
}

Graph parse_edge_list(const std::string& text, std::size_t vertex_count) {
  std::istringstream lines(text);
  std::string line;
  std::vector<Graph::Edge> edges;
  std::size_t largest = 0;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 1 || v < 1) {
      throw ArgumentError("edge list line " + std::to_string(line_no) +
                          ": expected two positive vertex labels");
    }
    edges.emplace_back(static_cast<std::size_t>(u - 1),
                       static_cast<std::size_t>(v - 1));
    largest = std::max({largest, static_cast<std::size_t>(u),
                        static_cast<std::size_t>(v)});
  }
  return Graph(vertex_count == 0 ? largest : vertex_count, std::move(edges));
}

DkpInstance independent_set_to_dkp(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (graph.edges().empty()) {
    throw ArgumentError("independent_set_to_dkp needs at least one edge");
  }
  std::vector<std::vector<Value>> rows;
  std::vector<bool> covered(n, false);
  for (const auto& [u, v] : graph.edges()) {
    std::vector<Value> row(n, 0);
    row[u] = 1;
    row[v] = 1;
    covered[u] = covered[v] = true;
    rows.push_back(std::move(row));
  }
  std::vector<Value> capacities(rows.size(), 1);
  if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    rows.emplace_back(n, 1);
    capacities.push_back(static_cast<Value>(n));
  }
  return DkpInstance(std::vector<Value>(n, 1), std::move(rows),
                     std::move(capacities));
}

Graph pad_graph_vertices(const Graph& graph) {
  return Graph(graph.vertex_count() + graph.edges().size(), graph.edges());
}

ThreePartitionInstance::ThreePartitionInstance(std::vector<Value> weights)
    : weights_(std::move(weights)), target_(0) {
  if (weights_.empty() || weights_.size() % 3 != 0) {
    throw ArgumentError("3-Partition needs 3m > 0 weights, got " +
                        std::to_string(weights_.size()));
  }
  const auto m = static_cast<Value>(weights_.size() / 3);
  Value total = 0;
  for (Value w : weights_) {
    if (w < 1) throw ArgumentError("3-Partition weights must be positive");
    total = checked_add(total, w);
  }
  if (total % m != 0) {
    throw ArgumentError("weight sum " + std::to_string(total) +
                        " is not divisible by m = " + std::to_string(m));
  }
  target_ = total / m;
  for (Value w : weights_) {
    // B/4 < w < B/2 in integers.
    if (!(4 * w > target_ && 2 * w < target_)) {
      throw ArgumentError("weight " + std::to_string(w) +
                          " is outside (B/4, B/2) for B = " +
                          std::to_string(target_));
    }
  }
}

ThresholdInstance three_partition_to_mkp(const ThreePartitionInstance& tp) {
  const std::size_t n = tp.weights().size();
  return {MkpInstance(std::vector<Value>(n, 1), tp.weights(),
                      std::vector<Value>(tp.group_count(), tp.target())),
          static_cast<Value>(n)};
}

Value StableRng::uniform(Value lo, Value hi) {
  if (lo > hi) {
    throw ArgumentError("empty range [" + std::to_string(lo) + ", " +
                        std::to_string(hi) + "]");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<Value>(engine_());
  }
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<Value>(draw % range);
}

bool StableRng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw ArgumentError("zero denominator");
  return static_cast<std::uint64_t>(
             uniform(0, static_cast<Value>(denominator) - 1)) < numerator;
}

namespace {

void check_bounds(const ValueBounds& b) {
  if (b.profit_max < 1 || b.size_max < 1 || b.capacity_min < 1 ||
      b.capacity_max < b.capacity_min) {
    throw ArgumentError("value bounds must be >= 1 with capacity_min <= capacity_max");
  }
  if (b.fit_items && b.size_max > b.capacity_min) {
    throw ArgumentError("fit_items needs size_max <= capacity_min");
  }
}

template <class T>
void stable_shuffle(std::vector<T>& values, StableRng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<Value>(i) - 1));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace

KpInstance random_kp(std::size_t n, const ValueBounds& bounds, StableRng& rng) {
  check_bounds(bounds);
  const Value capacity = rng.uniform(bounds.capacity_min, bounds.capacity_max);
  std::vector<Value> profits(n);
  std::vector<Value> sizes(n);
  for (std::size_t j = 0; j < n; ++j) {
    profits[j] = rng.uniform(1, bounds.profit_max);
    sizes[j] = rng.uniform(1, bounds.size_max);
  }
  return KpInstance(std::move(profits), std::move(sizes), capacity);
}

DkpInstance random_dkp(std::size_t n, std::size_t d, const ValueBounds& bounds,
                       StableRng& rng) {
  check_bounds(bounds);
  std::vector<Value> capacities(d);
  for (auto& c : capacities) c = rng.uniform(bounds.capacity_min, bounds.capacity_max);
  std::vector<Value> profits(n);
  for (auto& p : profits) p = rng.uniform(1, bounds.profit_max);
  const Value lowest = bounds.allow_zero_sizes ? 0 : 1;
  std::vector<std::vector<Value>> table(d, std::vector<Value>(n));
  for (std::size_t j = 0; j < n; ++j) {
    Value column = 0;
    for (std::size_t i = 0; i < d; ++i) {
      table[i][j] = rng.uniform(lowest, bounds.size_max);
      column += table[i][j];
    }
    if (column == 0) {
      table[static_cast<std::size_t>(rng.uniform(0, static_cast<Value>(d) - 1))][j] = 1;
    }
  }
  return DkpInstance(std::move(profits), std::move(table), std::move(capacities));
}

MkpInstance random_mkp(std::size_t n, std::size_t m, const ValueBounds& bounds,
                       StableRng& rng) {
  check_bounds(bounds);
  std::vector<Value> capacities(m);
  for (auto& c : capacities) c = rng.uniform(bounds.capacity_min, bounds.capacity_max);
  std::vector<Value> profits(n);
  std::vector<Value> sizes(n);
  for (std::size_t j = 0; j < n; ++j) {
    profits[j] = rng.uniform(1, bounds.profit_max);
    sizes[j] = rng.uniform(1, bounds.size_max);
  }
  return MkpInstance(std::move(profits), std::move(sizes), std::move(capacities));
}

AnyInstance random_instance(ProblemKind kind, std::size_t n, std::size_t d_or_m,
                            const ValueBounds& bounds, std::uint64_t seed) {
  StableRng rng(seed);
  switch (kind) {
    case ProblemKind::kKp:
      return random_kp(n, bounds, rng);
    case ProblemKind::kDkp:
      return random_dkp(n, d_or_m, bounds, rng);
    case ProblemKind::kMkp:
      return random_mkp(n, d_or_m, bounds, rng);
  }
  throw ArgumentError("unknown instance kind");
}

Graph random_graph(std::size_t vertices, std::uint64_t numerator,
                   std::uint64_t denominator, StableRng& rng) {
  std::vector<Graph::Edge> edges;
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (rng.chance(numerator, denominator)) edges.emplace_back(u, v);
    }
  }
  return Graph(vertices, std::move(edges));
}

namespace {

// Weights w with B/4 < w < B/2.
std::pair<Value, Value> open_quarter_half(Value target) {
  return {target / 4 + 1, (target + 1) / 2 - 1};
}

}  // namespace

ThreePartitionInstance random_three_partition_yes(std::size_t m, Value target,
                                                  StableRng& rng) {
  const auto [lo, hi] = open_quarter_half(target);
  if (m == 0 || lo > hi || 3 * lo > target || 3 * hi < target) {
    throw ArgumentError("no triple inside (B/4, B/2) sums to B = " +
                        std::to_string(target));
  }
  std::vector<Value> weights;
  for (std::size_t g = 0; g < m; ++g) {
    while (true) {
      const Value a = rng.uniform(lo, hi);
      const Value b = rng.uniform(lo, hi);
      const Value c = target - a - b;
      if (c >= lo && c <= hi) {
        weights.insert(weights.end(), {a, b, c});
        break;
      }
    }
  }
  stable_shuffle(weights, rng);
  return ThreePartitionInstance(std::move(weights));
}

ThreePartitionInstance random_three_partition(std::size_t m, Value target,
                                              StableRng& rng) {
  const auto [lo, hi] = open_quarter_half(target);
  if (m == 0 || lo > hi || 3 * lo > target || 3 * hi < target) {
    throw ArgumentError("no weights inside (B/4, B/2) can reach B = " +
                        std::to_string(target));
  }
  const std::size_t n = 3 * m;
  const Value total = static_cast<Value>(m) * target;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Value> weights(n);
    Value sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      weights[j] = rng.uniform(lo, hi);
      sum += weights[j];
    }
    weights[n - 1] = total - sum;
    if (weights[n - 1] >= lo && weights[n - 1] <= hi) {
      return ThreePartitionInstance(std::move(weights));
    }
  }
  throw ArgumentError("could not draw a 3-Partition instance for B = " +
                      std::to_string(target));
}

}  // namespace knapkit
