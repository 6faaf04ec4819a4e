#ifndef KNAPKIT_BENCH_HPP
#define KNAPKIT_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "knapkit/instances.hpp"
#include "knapkit/limits.hpp"
#include "knapkit/parameters.hpp"

namespace knapkit {

struct BenchRecord {
  std::string instance;
  std::string algorithm;
  ParameterProfile profile;
  std::int64_t elapsed_ns = 0;  // median over repetitions
  std::uint64_t cells = 0;
  std::optional<Value> profit;   // absent when the solver hit a limit
  std::optional<bool> verified;  // absent when no oracle fit the budget
  std::string note;
};

struct BenchConfig {
  // Known families: kp-random, kp-scaling-c, kp-scaling-n, dkp-random,
  // mkp-random, isg. Empty means kp-random, dkp-random and mkp-random.
  std::vector<std::string> families;
  // Solve algorithm names; empty runs every algorithm of the instance's kind.
  // Names that do not apply to a kind are skipped for it.
  std::vector<std::string> algorithms;
  std::size_t count = 5;  // instances per family (per size step for scaling)
  std::size_t reps = 1;
  std::uint64_t seed = 1;
  double epsilon = 0.1;
  SolverLimits limits;
};

struct BenchInstance {
  std::string id;
  AnyInstance instance;
};

std::vector<std::string> bench_families();

// The instance set of a config. Depends only on families, count and seed.
std::vector<BenchInstance> bench_instances(const BenchConfig& config);

// One record per (instance, applicable algorithm), sorted by instance id and
// then algorithm. Each result is checked against an exact solver other than
// the one under test. Limit hits are reported on `diagnostics`.
std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::ostream* diagnostics = nullptr);

std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances,
                                   const BenchConfig& config,
                                   std::ostream* diagnostics = nullptr);

extern const char* const kBenchCsvHeader;

std::string to_csv_row(const BenchRecord& record);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace knapkit

#endif  // KNAPKIT_BENCH_HPP
