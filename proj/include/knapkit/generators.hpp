#ifndef KNAPKIT_GENERATORS_HPP
#define KNAPKIT_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "knapkit/instances.hpp"
#include "knapkit/parameters.hpp"

namespace knapkit {

// Simple undirected graph on vertices 0..vertex_count-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  // Throws ArgumentError on self-loops, duplicate edges or unknown vertices.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph&) const = default;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// The 6-vertex, 7-edge graph whose d-KP image has optimum 3 ({v1, v4, v6}),
// with edges in the order of the published size table's rows.
Graph figure_one_graph();

// Whitespace-separated "u v" pairs, one per line, 1-based. Blank lines and
// lines starting with '#' are skipped. vertex_count defaults to the largest
// label seen.
Graph parse_edge_list(const std::string& text, std::size_t vertex_count = 0);

// One unit-profit item per vertex, one unit-capacity dimension per edge with
// size 1 exactly at the edge's endpoints. Isolated vertices would get an
// all-zero size vector, so when any exist one extra dimension with size 1
// everywhere and capacity n is appended; it never binds. OPT of the result is
// the maximum independent set size.
DkpInstance independent_set_to_dkp(const Graph& graph);

// Adds one isolated vertex per edge. The maximum independent set grows by
// exactly |E| and the d-KP image has fewer dimensions than items.
Graph pad_graph_vertices(const Graph& graph);

class ThreePartitionInstance {
 public:
  // Requires n = 3m > 0, integral target B = sum / m and B/4 < w < B/2.
  explicit ThreePartitionInstance(std::vector<Value> weights);

  const std::vector<Value>& weights() const { return weights_; }
  std::size_t group_count() const { return weights_.size() / 3; }
  Value target() const { return target_; }

 private:
  std::vector<Value> weights_;
  Value target_;
};

struct ThresholdInstance {
  MkpInstance instance;
  Value threshold;
};

// m knapsacks of capacity B, item sizes w_j, unit profits, threshold k = n.
ThresholdInstance three_partition_to_mkp(const ThreePartitionInstance& tp);

// mt19937_64 (bit-exact across standard libraries) with an unbiased
// rejection-sampled range map, so seeds reproduce on every platform.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  Value uniform(Value lo, Value hi);
  // True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

struct ValueBounds {
  Value profit_max = 20;
  Value size_max = 20;
  Value capacity_min = 1;
  Value capacity_max = 30;
  // d-KP only: sizes are drawn from [0, size_max].
  bool allow_zero_sizes = true;
  // Keeps every item packable on its own (s_j <= c, s_ij <= c_i, s_j <= c_max).
  // Requires size_max <= capacity_min.
  bool fit_items = false;
};

KpInstance random_kp(std::size_t n, const ValueBounds& bounds, StableRng& rng);
DkpInstance random_dkp(std::size_t n, std::size_t d, const ValueBounds& bounds,
                       StableRng& rng);
MkpInstance random_mkp(std::size_t n, std::size_t m, const ValueBounds& bounds,
                       StableRng& rng);

// Seeded dispatch over the three kinds; d_or_m is ignored for KP.
AnyInstance random_instance(ProblemKind kind, std::size_t n, std::size_t d_or_m,
                            const ValueBounds& bounds, std::uint64_t seed);

// G(n, p) with p = numerator / denominator.
Graph random_graph(std::size_t vertices, std::uint64_t numerator,
                   std::uint64_t denominator, StableRng& rng);

// A yes-instance: m triples that each sum to `target`, shuffled. Throws
// ArgumentError when no triple inside (B/4, B/2) sums to B (e.g. B = 8).
ThreePartitionInstance random_three_partition_yes(std::size_t m, Value target,
                                                  StableRng& rng);

// 3m weights inside (B/4, B/2) summing to m * B, drawn by rejection. The
// result may or may not be solvable.
ThreePartitionInstance random_three_partition(std::size_t m, Value target,
                                              StableRng& rng);

}  // namespace knapkit

#endif  // KNAPKIT_GENERATORS_HPP
