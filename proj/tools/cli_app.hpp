// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDOPT_TOOLS_CLI_APP_HPP
#define MATROIDOPT_TOOLS_CLI_APP_HPP

#include <chrono>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "matroidopt/matroidopt.hpp"

namespace matroidopt::cli {

namespace detail {

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

inline std::pair<int, int> parse_size_pair(const std::string& text) {
  const auto comma = text.find_first_of(",:x");
  if (comma == std::string::npos) {
    throw UsageError("size '" + text + "' must look like <a>,<b>");
  }
  try {
    const int a = std::stoi(text.substr(0, comma));
    const int b = std::stoi(text.substr(comma + 1));
    return {a, b};
  } catch (const std::exception&) {
    throw UsageError("size '" + text + "' must look like <a>,<b>");
  }
}

inline double run_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct SolveOptions {
  std::string file;
  std::string algorithm = "esa";
  std::string format = "json";
  std::string output;
  long long max_enumeration = 10'000'000;
};

inline void emit_report(const SolveReport& report, const std::string& format,
                        std::ostream& out) {
  if (format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else if (format == "csv") {
    out << report_to_csv(report);
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
}

inline void run_solve(const SolveOptions& options, std::ostream& fallback) {
  const BicriteriaInstance instance = parse_instance_file(options.file);
  SolveReport report;
  report.algorithm = options.algorithm;
  const auto start = std::chrono::steady_clock::now();
  if (options.algorithm == "esa") {
    EsaResult result = run_esa(instance);
    report.timing_ms = run_ms(start);
    report.front = std::move(result.front);
    report.swaps = std::move(result.swaps);
    report.has_swaps = true;
    report.counts.emplace_back("Y_N", static_cast<long long>(report.front.points.size()));
  } else if (options.algorithm == "ce") {
    CeOptions ce_options;
    ce_options.max_bases = options.max_enumeration;
    ce_options.collect_efficient = true;
    CeResult result = solve_by_enumeration(instance, ce_options);
    report.timing_ms = run_ms(start);
    report.front = std::move(result.front);
    report.counts.emplace_back("Y_N", static_cast<long long>(report.front.points.size()));
    report.counts.emplace_back("X_E", static_cast<long long>(result.efficient.bases.size()));
    report.counts.emplace_back("X", result.n_bases);
  } else if (options.algorithm == "dp") {
    DpResult result = dp_uniform(instance);
    report.timing_ms = run_ms(start);
    report.front = std::move(result.front);
    report.counts.emplace_back("Y_N", static_cast<long long>(report.front.points.size()));
    report.counts.emplace_back("X_E", static_cast<long long>(result.efficient.bases.size()));
  } else if (options.algorithm == "naive") {
    NaiveResult result = naive_minimal_swap_solver(instance);
    report.timing_ms = run_ms(start);
    report.front = std::move(result.front);
    report.swaps = std::move(result.swaps);
    report.has_swaps = true;
    report.counts.emplace_back("Y_N", static_cast<long long>(report.front.points.size()));
  } else {
    throw UsageError("unknown algorithm '" + options.algorithm + "'");
  }
  OutputSink sink(options.output, fallback);
  emit_report(report, options.format, sink.stream());
}

struct GenOptions {
  std::string kind;
  int n = 0;
  int m = 0;
  int k = 0;
  int beta = 1;
  long long c_max = 50'000;
  std::uint64_t seed = 1;
  std::string output;
};

inline void run_gen(const GenOptions& options, std::ostream& fallback) {
  OutputSink sink(options.output, fallback);
  if (options.kind == "graphic") {
    if (options.n < 2 || options.m < 1) {
      throw UsageError("graphic generation needs --n and --m");
    }
    write_instance(gen_graphic(options.n, options.m, options.c_max, options.seed),
                   sink.stream());
  } else if (options.kind == "uniform") {
    if (options.n < 1) throw UsageError("uniform generation needs --n");
    const int k = options.k > 0 ? options.k : std::max(1, options.n / 2);
    write_instance(gen_uniform(options.n, k, options.beta, options.seed),
                   sink.stream());
  } else {
    throw UsageError("unknown instance kind '" + options.kind + "'");
  }
}

struct FileOptions {
  std::string file;
  std::string format = "plain";
  std::string output;
  long long max_enumeration = 10'000'000;
};

inline void run_count(const FileOptions& options, std::ostream& fallback) {
  const BicriteriaInstance instance = parse_instance_file(options.file);
  const BigInt count = count_bases(instance.matroid(), instance.kind());
  OutputSink sink(options.output, fallback);
  if (options.format == "json") {
    nlohmann::json doc;
    doc["count"] = count.str();
    sink.stream() << doc.dump(2) << '\n';
  } else if (options.format == "plain") {
    sink.stream() << count.str() << '\n';
  } else {
    throw UsageError("unknown format '" + options.format + "'");
  }
}

inline void run_connected(const FileOptions& options, std::ostream& fallback) {
  const BicriteriaInstance instance = parse_instance_file(options.file);
  EfficientSet efficient;
  if (instance.kind() == MatroidKind::kUniform) {
    DpOptions dp_options;
    dp_options.collect_all = true;
    dp_options.max_total_bases = options.max_enumeration;
    efficient = dp_uniform(instance, dp_options).efficient;
  } else {
    CeOptions ce_options;
    ce_options.max_bases = options.max_enumeration;
    ce_options.collect_efficient = true;
    efficient = solve_by_enumeration(instance, ce_options).efficient;
  }
  const AdjacencyReport adjacency = adjacency_connected(efficient.bases);
  OutputSink sink(options.output, fallback);
  if (options.format == "json") {
    nlohmann::json doc;
    doc["connected"] = adjacency.connected;
    doc["components"] = adjacency.components;
    doc["efficient_bases"] = static_cast<long long>(efficient.bases.size());
    sink.stream() << doc.dump(2) << '\n';
  } else if (options.format == "plain") {
    sink.stream() << "connected=" << (adjacency.connected ? "true" : "false")
                  << " components=" << adjacency.components
                  << " efficient_bases=" << efficient.bases.size() << '\n';
  } else {
    throw UsageError("unknown format '" + options.format + "'");
  }
}

struct ExperimentOptions {
  std::vector<std::string> sizes;
  std::vector<int> betas;
  int n = 20;
  int beta = 1;
  int instances = 5;
  std::uint64_t seed = 1;
  int jobs = 0;
  long long c_max = 50'000;
  bool no_timings = false;
  std::string output;
};

inline void run_experiment(const std::string& kind,
                           const ExperimentOptions& options,
                           std::ostream& fallback) {
  OutputSink sink(options.output, fallback);
  if (kind == "graphic-bench") {
    GraphicBenchSpec spec;
    if (!options.sizes.empty()) {
      spec.sizes.clear();
      for (const std::string& size : options.sizes) {
        spec.sizes.push_back(parse_size_pair(size));
      }
    }
    spec.instances = options.instances;
    spec.c_max = options.c_max;
    spec.seed = options.seed;
    spec.jobs = options.jobs;
    spec.include_timings = !options.no_timings;
    sink.stream() << run_graphic_bench(spec);
  } else if (kind == "uniform-bench") {
    UniformBenchSpec spec;
    if (!options.sizes.empty()) {
      spec.sizes.clear();
      for (const std::string& size : options.sizes) {
        spec.sizes.push_back(parse_size_pair(size));
      }
    }
    spec.beta = options.beta;
    spec.instances = options.instances;
    spec.seed = options.seed;
    spec.jobs = options.jobs;
    spec.include_timings = !options.no_timings;
    sink.stream() << run_uniform_bench(spec);
  } else if (kind == "beta-search") {
    BetaSearchSpec spec;
    spec.n = options.n;
    if (!options.betas.empty()) spec.betas = options.betas;
    spec.instances = options.instances;
    spec.seed = options.seed;
    spec.jobs = options.jobs;
    sink.stream() << beta_search_csv(run_beta_search(spec));
  } else {
    throw UsageError("unknown experiment kind '" + kind + "'");
  }
}

}  // namespace detail

// Builds and runs the command-line interface against explicit streams so
// tests can drive it in-process. Exit codes: 0 ok, 2 instance parse
// error, 3 infeasible instance, 4 usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Biobjective matroid optimization: exact fronts for"
               " integer-cost problems with one binary criterion"};
  app.require_subcommand(1);

  detail::SolveOptions solve_options;
  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the non-dominated set of an instance file");
  solve->add_option("file", solve_options.file, "instance file")->required();
  solve->add_option("--algorithm", solve_options.algorithm,
                    "esa | ce | dp | naive");
  solve->add_option("--format", solve_options.format, "json | csv");
  solve->add_option("--output", solve_options.output, "write to file");
  solve->add_option("--max-enumeration", solve_options.max_enumeration,
                    "basis budget for ce");

  detail::GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", gen_options.kind, "graphic | uniform")->required();
  gen->add_option("--n", gen_options.n, "vertices / elements");
  gen->add_option("--m", gen_options.m, "edges (graphic)");
  gen->add_option("--k", gen_options.k, "rank (uniform; default n/2)");
  gen->add_option("--beta", gen_options.beta, "b-value range {0..beta}");
  gen->add_option("--cmax", gen_options.c_max, "cost range {1..cmax}");
  gen->add_option("--seed", gen_options.seed, "RNG seed");
  gen->add_option("--output", gen_options.output, "write to file");

  detail::FileOptions count_options;
  CLI::App* count = app.add_subcommand("count", "Count the bases of an instance");
  count->add_option("file", count_options.file, "instance file")->required();
  count->add_option("--format", count_options.format, "plain | json");
  count->add_option("--output", count_options.output, "write to file");

  detail::FileOptions connected_options;
  CLI::App* connected = app.add_subcommand(
      "connected", "Check exchange-graph connectivity of the efficient set");
  connected->add_option("file", connected_options.file, "instance file")
      ->required();
  connected->add_option("--format", connected_options.format, "plain | json");
  connected->add_option("--output", connected_options.output, "write to file");
  connected->add_option("--max-enumeration", connected_options.max_enumeration,
                        "basis budget");

  detail::ExperimentOptions experiment_options;
  std::string experiment_kind;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Run a seeded benchmark or search harness");
  experiment
      ->add_option("kind", experiment_kind,
                   "graphic-bench | uniform-bench | beta-search")
      ->required();
  experiment->add_option("--size", experiment_options.sizes,
                         "size pair <n>,<m> or <n>,<k>; repeatable");
  experiment->add_option("--betas", experiment_options.betas,
                         "beta values for beta-search; repeatable");
  experiment->add_option("--n", experiment_options.n, "elements (beta-search)");
  experiment->add_option("--beta", experiment_options.beta,
                         "b-value range (uniform-bench)");
  experiment->add_option("--instances", experiment_options.instances,
                         "instances per configuration");
  experiment->add_option("--seed", experiment_options.seed, "RNG seed");
  experiment->add_option("--jobs", experiment_options.jobs,
                         "worker threads (0 = auto)");
  experiment->add_option("--cmax", experiment_options.c_max,
                         "cost range (graphic-bench)");
  experiment->add_flag("--no-timings", experiment_options.no_timings,
                       "omit timing columns for byte-stable output");
  experiment->add_option("--output", experiment_options.output, "write to file");

  try {
    app.parse(argc, argv);
    if (solve->parsed()) {
      detail::run_solve(solve_options, out);
    } else if (gen->parsed()) {
      detail::run_gen(gen_options, out);
    } else if (count->parsed()) {
      detail::run_count(count_options, out);
    } else if (connected->parsed()) {
      detail::run_connected(connected_options, out);
    } else if (experiment->parsed()) {
      detail::run_experiment(experiment_kind, experiment_options, out);
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 4;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 4;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what()
        << " (raise --max-enumeration to continue)\n";
    return 4;
  } catch (const InfeasibleError& e) {
    err << "infeasible instance: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "invalid instance: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace matroidopt::cli

#endif  // MATROIDOPT_TOOLS_CLI_APP_HPP
