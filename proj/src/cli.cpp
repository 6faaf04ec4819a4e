#include "knapkit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "knapkit/bench.hpp"
#include "knapkit/generators.hpp"
#include "knapkit/io.hpp"
#include "knapkit/reducers.hpp"
#include "knapkit/solve.hpp"

namespace knapkit {

using Record = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::uint64_t memory_ceiling = SolverLimits{}.memory_ceiling;
  std::uint64_t enum_budget = SolverLimits{}.enumeration_budget;
  std::string format;  // empty: per-command default

  SolverLimits limits() const {
    SolverLimits l;
    l.memory_ceiling = memory_ceiling;
    l.enumeration_budget = enum_budget;
    return l;
  }
};

std::string flat(const Record& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out;
    for (const auto& v : value) out += (out.empty() ? "" : " ") + flat(v);
    return out;
  }
  if (value.is_null()) return "";
  return value.dump();
}

void emit(std::ostream& out, const Record& record, const std::string& format) {
  if (format == "kv") {
    for (const auto& [key, value] : record.items()) {
      out << key << '=' << flat(value) << '\n';
    }
  } else if (format == "csv") {
    std::string header, row;
    bool first = true;
    for (const auto& [key, value] : record.items()) {
      if (!first) {
        header += ',';
        row += ',';
      }
      first = false;
      header += key;
      row += flat(value);
    }
    out << header << '\n' << row << '\n';
  } else {
    out << record.dump() << '\n';
  }
}

// 0-based internal indices shown 1-based.
std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& x : out) ++x;
  return out;
}

void put_solution(Record& record, const PackingSolution& solution) {
  record["profit"] = solution.profit;
  record["items"] = one_based(solution.items);
  if (solution.kind == SolutionKind::kAssignment) {
    record["knapsacks"] = one_based(solution.knapsacks);
  }
}

Record profile_record(const ParameterProfile& p) {
  Record r;
  r["type"] = to_string(p.kind);
  r["n"] = p.n;
  r["d"] = p.d;
  r["m"] = p.m;
  r["k"] = p.threshold ? Record(*p.threshold) : Record(nullptr);
  r["capacities"] = p.capacities;
  r["c_max"] = p.c_max;
  r["c_min"] = p.c_min;
  r["p_max"] = p.p_max;
  r["p_min"] = p.p_min;
  r["s_max"] = p.s_max;
  r["s_min"] = p.s_min;
  r["sum_profits"] = p.sum_profits;
  r["sum_sizes"] = p.sum_sizes;
  r["val"] = p.val;
  r["max"] = p.max_val;
  r["sizevar"] = p.sizevar;
  r["pvar"] = p.pvar;
  r["bit_size"] = p.bit_size;
  return r;
}

std::string pick_format(const GlobalOptions& g, const std::string& fallback) {
  return g.format.empty() ? fallback : g.format;
}

int cmd_solve(const GlobalOptions& g, const std::string& path,
              const std::string& algo, double eps, std::ostream& out) {
  const auto file = read_instance_file(path);
  const auto outcome = solve_instance(file.instance, {algo, eps, g.limits()});
  Record r;
  put_solution(r, outcome.solution);
  r["method"] = outcome.method;
  r["verdict"] = to_string(outcome.verdict);
  r["elapsed_ns"] = outcome.elapsed_ns;
  r["cells"] = outcome.cells;
  emit(out, r, pick_format(g, "json"));
  return 0;
}

int cmd_decide(const GlobalOptions& g, const std::string& path,
               std::optional<Value> k, const std::string& strategy,
               std::ostream& out) {
  const auto file = read_instance_file(path);
  if (!k) k = file.threshold;
  if (!k) throw ArgumentError("decide needs --k or a 'threshold' in the instance");
  const auto result = decide_instance(file.instance, *k, strategy, g.limits());
  Record r;
  r["answer"] = result.answer ? "yes" : "no";
  r["k"] = *k;
  if (result.witness) {
    put_solution(r, *result.witness);
  } else {
    r["profit"] = nullptr;
    r["items"] = Record::array();
  }
  r["method"] = result.method;
  emit(out, r, pick_format(g, "json"));
  return 0;
}

template <class Instance>
void report(std::ostream& err, const ReductionReport<Instance>& rep) {
  err << "rule=" << rep.rule << " removed=" << rep.removed_items.size()
      << " kept=" << rep.achieved << " bound=" << rep.bound
      << " strict=" << (rep.bound_strict ? "true" : "false")
      << " within_bound=" << (rep.within_bound() ? "true" : "false") << "\n";
}

int cmd_reduce(const std::string& path, std::string rule, std::optional<Value> k,
               std::ostream& out, std::ostream& err) {
  const auto file = read_instance_file(path);
  if (!k) k = file.threshold;
  const auto kind = kind_of(file.instance);
  if (rule == "auto") {
    rule = kind == ProblemKind::kKp    ? "kp-capacity"
           : kind == ProblemKind::kDkp ? "dkp-size-vectors"
           : k                         ? "mkp-profit-threshold"
                                       : "mkp-capacity-sum";
  }
  auto mismatch = [&] {
    return ArgumentError("rule '" + rule + "' does not apply to " +
                         to_string(kind) + " instances");
  };
  if (rule == "kp-capacity") {
    if (kind != ProblemKind::kKp) throw mismatch();
    const auto rep = reduce_kp_by_capacity(std::get<KpInstance>(file.instance));
    out << format_instance(rep.instance, file.threshold);
    report(err, rep);
  } else if (rule == "dkp-size-vectors") {
    if (kind != ProblemKind::kDkp) throw mismatch();
    const auto rep = reduce_dkp_by_size_vectors(std::get<DkpInstance>(file.instance));
    out << format_instance(rep.instance, file.threshold);
    report(err, rep);
  } else if (rule == "mkp-capacity-sum" || rule == "mkp-profit-threshold") {
    if (kind != ProblemKind::kMkp) throw mismatch();
    const auto& x = std::get<MkpInstance>(file.instance);
    if (rule == "mkp-capacity-sum") {
      const auto rep = reduce_mkp_by_capacity_sum(x);
      out << format_instance(rep.instance, file.threshold);
      report(err, rep);
    } else {
      if (!k) throw ArgumentError("mkp-profit-threshold needs --k or a threshold");
      const auto rep = reduce_mkp_by_profit_threshold(x, *k);
      out << format_instance(rep.instance, *k);
      report(err, rep);
    }
  } else {
    throw ArgumentError("unknown rule '" + rule + "'");
  }
  return 0;
}

int cmd_params(const GlobalOptions& g, const std::string& path,
               std::optional<Value> k, std::ostream& out) {
  const auto file = read_instance_file(path);
  if (!k) k = file.threshold;
  const auto profile = extract_profile(file.instance, k);
  auto r = profile_record(profile);
  const auto plan = plan_solver(profile);
  r["plan"] = to_string(plan.algorithm);
  r["plan_cost"] = plan.predicted_cost;
  r["plan_rationale"] = plan.rationale;
  emit(out, r, pick_format(g, "kv"));
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GenOptions {
  std::string kind;
  // isg
  std::string graph_path;
  bool figure1 = false;
  bool pad = false;
  std::size_t vertices = 0;
  unsigned edge_percent = 50;
  // 3part
  std::vector<Value> weights;
  std::size_t groups = 0;
  Value target = 0;
  bool yes = false;
  // random
  std::string type = "kp";
  std::size_t n = 10;
  std::size_t dm = 2;
  ValueBounds bounds;
};

int cmd_gen(const GlobalOptions& g, const GenOptions& o, std::ostream& out) {
  StableRng rng(g.seed);
  if (o.kind == "isg") {
    const int sources = int(o.figure1) + int(!o.graph_path.empty()) + int(o.vertices > 0);
    if (sources != 1) {
      throw ArgumentError("gen --kind isg needs exactly one of --figure1, --graph, --vertices");
    }
    Graph graph = o.figure1 ? figure_one_graph()
                  : !o.graph_path.empty()
                      ? parse_edge_list(slurp(o.graph_path))
                      : random_graph(o.vertices, o.edge_percent, 100, rng);
    if (o.pad) graph = pad_graph_vertices(graph);
    out << format_instance(independent_set_to_dkp(graph));
  } else if (o.kind == "3part") {
    const auto tp = !o.weights.empty()
                        ? ThreePartitionInstance(o.weights)
                    : o.yes ? random_three_partition_yes(o.groups, o.target, rng)
                            : random_three_partition(o.groups, o.target, rng);
    const auto reduced = three_partition_to_mkp(tp);
    out << format_instance(reduced.instance, reduced.threshold);
  } else if (o.kind == "random") {
    const ProblemKind kind = o.type == "kp"    ? ProblemKind::kKp
                             : o.type == "dkp" ? ProblemKind::kDkp
                             : o.type == "mkp"
                                 ? ProblemKind::kMkp
                                 : throw ArgumentError("unknown --type '" + o.type + "'");
    out << format_instance(random_instance(kind, o.n, o.dm, o.bounds, g.seed));
  } else {
    throw ArgumentError("unknown --kind '" + o.kind + "'");
  }
  return 0;
}

int cmd_bench(const GlobalOptions& g, BenchConfig config, std::ostream& out,
              std::ostream& err) {
  config.seed = g.seed;
  config.limits = g.limits();
  const auto records = run_bench(config, &err);
  const auto format = pick_format(g, "csv");
  if (format == "csv") {
    write_csv(out, records);
    return 0;
  }
  for (const auto& rec : records) {
    Record r;
    r["instance"] = rec.instance;
    r["algo"] = rec.algorithm;
    r["n"] = rec.profile.n;
    r["d"] = rec.profile.d;
    r["m"] = rec.profile.m;
    r["c_max"] = rec.profile.c_max;
    r["p_max"] = rec.profile.p_max;
    r["val"] = rec.profile.val;
    r["elapsed_ns"] = rec.elapsed_ns;
    r["cells"] = rec.cells;
    r["profit"] = rec.profit ? Record(*rec.profit) : Record(nullptr);
    r["verified"] = rec.verified ? Record(*rec.verified) : Record(nullptr);
    emit(out, r, format);
    if (format == "kv") out << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Solvers, reductions and generators for KP, d-KP and MKP"};
  app.name("knapkit");
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed for gen and bench");
  app.add_option("--memory-ceiling", g.memory_ceiling, "Largest DP table, in cells");
  app.add_option("--enum-budget", g.enum_budget,
                 "Most candidates an enumeration may visit");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "kv"}));

  std::string path;
  std::optional<Value> k;

  auto* solve = app.add_subcommand("solve", "Solve an instance to optimality");
  std::string algo = "auto";
  double eps = 0.1;
  solve->add_option("file", path, "Instance file")->required();
  solve->add_option("--algo", algo, "auto, dp-capacity, dp-profit, brute, fptas, "
                                    "dp, partition, assign");
  solve->add_option("--eps", eps, "Accuracy of fptas")->check(CLI::Range(0.0, 1.0));

  auto* decide = app.add_subcommand("decide", "Answer OPT >= k");
  std::string strategy = "auto";
  decide->add_option("file", path, "Instance file")->required();
  decide->add_option("--k", k, "Threshold; defaults to the file's threshold");
  decide->add_option("--strategy", strategy,
                     "auto, dp-capacity, dp-profit, fptas-k, brute, dp, xp-k, "
                     "partition, assign");

  auto* reduce = app.add_subcommand("reduce", "Shrink an instance by a reduction rule");
  std::string rule = "auto";
  reduce->add_option("file", path, "Instance file")->required();
  reduce->add_option("--rule", rule)
      ->check(CLI::IsMember({"auto", "kp-capacity", "dkp-size-vectors",
                             "mkp-capacity-sum", "mkp-profit-threshold"}));
  reduce->add_option("--k", k, "Threshold for mkp-profit-threshold");

  auto* params = app.add_subcommand("params", "Print the parameter profile and plan");
  params->add_option("file", path, "Instance file")->required();
  params->add_option("--k", k, "Threshold");

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  GenOptions go;
  std::string weights;
  gen->add_option("--kind", go.kind)->required()->check(
      CLI::IsMember({"isg", "3part", "random"}));
  gen->add_option("--graph", go.graph_path, "Edge list, one 1-based 'u v' per line");
  gen->add_flag("--figure1", go.figure1, "Use the six-vertex example graph");
  gen->add_flag("--pad", go.pad, "Add one isolated vertex per edge");
  gen->add_option("--vertices", go.vertices, "Random graph size");
  gen->add_option("--edge-percent", go.edge_percent)->check(CLI::Range(0, 100));
  gen->add_option("--weights", weights, "Comma-separated 3-Partition weights");
  gen->add_option("--m", go.groups, "Number of triples");
  gen->add_option("--target", go.target, "Triple sum B");
  gen->add_flag("--yes", go.yes, "Plant a solution");
  gen->add_option("--type", go.type)->check(CLI::IsMember({"kp", "dkp", "mkp"}));
  gen->add_option("--n", go.n);
  gen->add_option("--dm", go.dm, "Dimensions (dkp) or knapsacks (mkp)");
  gen->add_option("--profit-max", go.bounds.profit_max);
  gen->add_option("--size-max", go.bounds.size_max);
  gen->add_option("--capacity-min", go.bounds.capacity_min);
  gen->add_option("--capacity-max", go.bounds.capacity_max);
  gen->add_flag("--fit", go.bounds.fit_items, "Every item fits on its own");

  auto* bench = app.add_subcommand("bench", "Run the benchmark suite, CSV on stdout");
  BenchConfig config;
  bench->add_option("--family", config.families, "Instance family (repeatable)");
  bench->add_option("--algo", config.algorithms, "Algorithm (repeatable)");
  bench->add_option("--count", config.count, "Instances per family");
  bench->add_option("--reps", config.reps, "Timed repetitions per record");
  bench->add_option("--eps", config.epsilon)->check(CLI::Range(0.0, 1.0));

  app.require_subcommand(1);

  // Name an unknown subcommand instead of reporting a missing one.
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    if (a.rfind("-", 0) == 0) {
      if (a.find('=') == std::string::npos && a != "-h" && a != "--help") ++i;
      continue;
    }
    const auto subs = app.get_subcommands([](CLI::App*) { return true; });
    if (std::none_of(subs.begin(), subs.end(),
                     [&](const CLI::App* sub) { return sub->get_name() == a; })) {
      err << "error: unknown subcommand '" << a << "'\n" << app.help();
      return 1;
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (solve->parsed()) return cmd_solve(g, path, algo, eps, out);
    if (decide->parsed()) return cmd_decide(g, path, k, strategy, out);
    if (reduce->parsed()) return cmd_reduce(path, rule, k, out, err);
    if (params->parsed()) return cmd_params(g, path, k, out);
    if (gen->parsed()) {
      if (!weights.empty()) {
        std::stringstream in(weights);
        std::string token;
        while (std::getline(in, token, ',')) {
          try {
            go.weights.push_back(std::stoll(token));
          } catch (const std::exception&) {
            throw ArgumentError("bad weight '" + token + "'");
          }
        }
      }
      return cmd_gen(g, go, out);
    }
    if (bench->parsed()) return cmd_bench(g, config, out, err);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace knapkit
