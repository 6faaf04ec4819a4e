#include "knapkit/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "knapkit/generators.hpp"
#include "knapkit/solve.hpp"

namespace knapkit {

const char* const kBenchCsvHeader =
    "instance,algo,n,d,m,c_max,p_max,val,elapsed_ns,cells,profit,verified";

std::vector<std::string> bench_families() {
  return {"kp-random", "kp-scaling-c", "kp-scaling-n",
          "dkp-random", "mkp-random", "isg"};
}

namespace {

std::string instance_id(const std::string& family, const std::string& tag,
                        std::size_t index) {
  char buffer[16];
  std::snprintf(buffer, sizeof buffer, "%03zu", index);
  return family + (tag.empty() ? "" : "-" + tag) + "-" + buffer;
}

std::size_t pick(StableRng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(
      rng.uniform(static_cast<Value>(lo), static_cast<Value>(hi)));
}

// Each family draws from its own stream so adding a family does not shift
// the instances of another.
StableRng family_rng(std::uint64_t seed, const std::string& family) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : family) h = (h ^ ch) * 1099511628211ULL;
  return StableRng(seed ^ h);
}

void add_family(const std::string& family, const BenchConfig& config,
                std::vector<BenchInstance>& out) {
  auto rng = family_rng(config.seed, family);
  if (family == "kp-random") {
    ValueBounds bounds;
    bounds.capacity_min = 5;
    for (std::size_t t = 0; t < config.count; ++t) {
      out.push_back({instance_id(family, "", t),
                     random_kp(pick(rng, 5, 12), bounds, rng)});
    }
  } else if (family == "kp-scaling-c") {
    for (Value c : {100, 200, 400}) {
      ValueBounds bounds;
      bounds.capacity_min = bounds.capacity_max = c;
      bounds.size_max = c / 4;
      for (std::size_t t = 0; t < config.count; ++t) {
        out.push_back({instance_id(family, "c" + std::to_string(c), t),
                       random_kp(20, bounds, rng)});
      }
    }
  } else if (family == "kp-scaling-n") {
    ValueBounds bounds;
    bounds.capacity_min = bounds.capacity_max = 200;
    bounds.size_max = 50;
    for (std::size_t n : {10, 20, 40}) {
      for (std::size_t t = 0; t < config.count; ++t) {
        out.push_back({instance_id(family, "n" + std::to_string(n), t),
                       random_kp(n, bounds, rng)});
      }
    }
  } else if (family == "dkp-random") {
    ValueBounds bounds;
    bounds.size_max = 6;
    bounds.capacity_max = 8;
    for (std::size_t t = 0; t < config.count; ++t) {
      const std::size_t n = pick(rng, 4, 10);
      out.push_back({instance_id(family, "", t),
                     random_dkp(n, pick(rng, 1, 3), bounds, rng)});
    }
  } else if (family == "mkp-random") {
    ValueBounds bounds;
    bounds.size_max = 8;
    bounds.capacity_max = 8;
    for (std::size_t t = 0; t < config.count; ++t) {
      const std::size_t n = pick(rng, 3, 7);
      out.push_back({instance_id(family, "", t),
                     random_mkp(n, pick(rng, 1, 3), bounds, rng)});
    }
  } else if (family == "isg") {
    for (std::size_t t = 0; t < config.count; ++t) {
      Graph graph(0, {});
      while (graph.edges().empty()) graph = random_graph(pick(rng, 4, 7), 1, 3, rng);
      out.push_back({instance_id(family, "", t), independent_set_to_dkp(graph)});
    }
  } else {
    std::string known;
    for (const auto& f : bench_families()) known += (known.empty() ? "" : ", ") + f;
    throw ArgumentError("unknown bench family '" + family + "' (known: " + known +
                        ")");
  }
}

// Exact solvers tried as oracles, most independent first.
std::vector<std::string> oracle_order(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kKp:
      return {"brute", "dp-profit", "dp-capacity"};
    case ProblemKind::kDkp:
      return {"brute", "dp"};
    case ProblemKind::kMkp:
      return {"assign", "partition", "dp"};
  }
  return {};
}

std::optional<Value> oracle_profit(const AnyInstance& instance,
                                   const std::string& algorithm,
                                   const SolverLimits& limits) {
  for (const auto& name : oracle_order(kind_of(instance))) {
    if (name == algorithm) continue;
    try {
      return solve_instance(instance, {name, 0.1, limits}).solution.profit;
    } catch (const ResourceError&) {
    }
  }
  return std::nullopt;
}

BenchRecord run_one(const BenchInstance& item, const std::string& algorithm,
                    const BenchConfig& config, std::ostream* diagnostics) {
  BenchRecord record;
  record.instance = item.id;
  record.algorithm = algorithm;
  record.profile = extract_profile(item.instance);
  const SolveOptions options{algorithm, config.epsilon, config.limits};
  try {
    std::vector<std::int64_t> times;
    SolveOutcome outcome;
    for (std::size_t r = 0; r < std::max<std::size_t>(1, config.reps); ++r) {
      outcome = solve_instance(item.instance, options);
      times.push_back(outcome.elapsed_ns);
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    record.elapsed_ns = times[times.size() / 2];
    record.cells = outcome.cells;
    record.profit = outcome.solution.profit;

    const auto check = evaluate(item.instance, outcome.solution);
    const auto oracle = oracle_profit(item.instance, algorithm, config.limits);
    if (oracle) {
      const auto a = static_cast<double>(*record.profit);
      const bool value_ok =
          algorithm == "fptas"
              ? *record.profit <= *oracle &&
                    a * (1.0 + config.epsilon) >= static_cast<double>(*oracle)
              : *record.profit == *oracle;
      record.verified = check.feasible && check.profit == *record.profit && value_ok;
    } else {
      record.note = "no oracle within budget";
    }
  } catch (const ResourceError& e) {
    record.note = e.what();
  }
  if (!record.note.empty() && diagnostics) {
    *diagnostics << "bench: " << item.id << " " << algorithm << ": "
                 << record.note << "\n";
  }
  return record;
}

}  // namespace

std::vector<BenchInstance> bench_instances(const BenchConfig& config) {
  std::vector<std::string> families = config.families;
  if (families.empty()) families = {"kp-random", "dkp-random", "mkp-random"};
  std::vector<BenchInstance> out;
  for (const auto& family : families) add_family(family, config, out);
  return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config,
                                   std::ostream* diagnostics) {
  return run_bench(bench_instances(config), config, diagnostics);
}

std::vector<BenchRecord> run_bench(const std::vector<BenchInstance>& instances,
                                   const BenchConfig& config,
                                   std::ostream* diagnostics) {
  std::vector<BenchRecord> records;
  for (const auto& item : instances) {
    const auto kind = kind_of(item.instance);
    for (const auto& algorithm : solve_algorithms(kind)) {
      if (algorithm == "auto") continue;
      if (!config.algorithms.empty() &&
          std::find(config.algorithms.begin(), config.algorithms.end(),
                    algorithm) == config.algorithms.end()) {
        continue;
      }
      records.push_back(run_one(item, algorithm, config, diagnostics));
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) {
                     return std::tie(a.instance, a.algorithm) <
                            std::tie(b.instance, b.algorithm);
                   });
  return records;
}

std::string to_csv_row(const BenchRecord& r) {
  std::ostringstream row;
  row << r.instance << ',' << r.algorithm << ',' << r.profile.n << ','
      << r.profile.d << ',' << r.profile.m << ',' << r.profile.c_max << ','
      << r.profile.p_max << ',' << r.profile.val << ',' << r.elapsed_ns << ','
      << r.cells << ',';
  if (r.profit) row << *r.profit;
  row << ',';
  if (r.verified) row << (*r.verified ? "true" : "false");
  return row.str();
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << "\n";
  for (const auto& r : records) out << to_csv_row(r) << "\n";
}

}  // namespace knapkit
