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

#ifndef MATROIDOPT_EXPERIMENTS_HPP
#define MATROIDOPT_EXPERIMENTS_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "matroidopt/esa.hpp"
#include "matroidopt/generators.hpp"
#include "matroidopt/knapsack_dp.hpp"
#include "matroidopt/pareto.hpp"
#include "matroidopt/rng.hpp"

namespace matroidopt {

// MATROID_BIOPT_THREADS beats the flag; non-positive flag means auto.
inline int resolve_jobs(int requested) {
  if (const char* env = std::getenv("MATROID_BIOPT_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed > 0) return parsed;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(0..count-1) on a worker pool. Iterations must be independent;
// the first exception aborts the remaining work and is rethrown.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
  if (count <= 0) return;
  jobs = static_cast<int>(std::max<long long>(1, std::min<long long>(jobs, count)));
  if (jobs == 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const long long i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

inline void append_ms(std::ostringstream& out, double ms, bool include) {
  if (include) {
    out << std::fixed;
    out.precision(3);
    out << ms;
  } else {
    out << '-';
  }
}

}  // namespace detail

// One row per generated instance, columns shaped like the usual
// size / red-count / front-size / time benchmark tables. With
// `include_timings` off the output is byte-identical for a fixed seed,
// which is what the determinism tests pin down.
struct GraphicBenchSpec {
  std::vector<std::pair<int, int>> sizes = {{50, 300}, {100, 2000}, {200, 8000}};
  int instances = 5;
  long long c_max = 50'000;
  std::uint64_t seed = 1;
  int jobs = 0;
  bool include_timings = true;
};

inline std::string run_graphic_bench(const GraphicBenchSpec& spec) {
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> cases;
  Rng master(spec.seed);
  for (const auto& size : spec.sizes) {
    for (int i = 0; i < spec.instances; ++i) {
      cases.emplace_back(size, master.next_u64());
    }
  }
  struct Row {
    int n, m;
    long long e1, yn;
    double ms;
  };
  std::vector<Row> rows(cases.size());
  parallel_for(static_cast<long long>(cases.size()), resolve_jobs(spec.jobs),
               [&](long long i) {
                 const auto& [size, seed] = cases[static_cast<std::size_t>(i)];
                 const BicriteriaInstance instance =
                     gen_graphic(size.first, size.second, spec.c_max, seed);
                 long long e1 = 0;
                 for (const CostPair& cost : instance.costs()) e1 += cost.b;
                 const auto start = std::chrono::steady_clock::now();
                 const EsaResult result = run_esa(instance);
                 rows[static_cast<std::size_t>(i)] = {
                     size.first, size.second, e1,
                     static_cast<long long>(result.front.points.size()),
                     detail::elapsed_ms(start)};
               });
  std::ostringstream out;
  out << "n,m,e1,yn,esa_ms\n";
  for (const Row& row : rows) {
    out << row.n << ',' << row.m << ',' << row.e1 << ',' << row.yn << ',';
    detail::append_ms(out, row.ms, spec.include_timings);
    out << '\n';
  }
  return out.str();
}

// Uniform-matroid benchmark. Solves with the knapsack recursion always,
// and with the swap algorithm when b is binary; fronts are cross-checked
// in that case, so a mismatch surfaces as an error instead of a row.
struct UniformBenchSpec {
  std::vector<std::pair<int, int>> sizes = {{20, 5}, {20, 10}, {30, 15}};
  int beta = 1;
  int instances = 5;
  std::uint64_t seed = 1;
  int jobs = 0;
  bool include_timings = true;
};

inline std::string run_uniform_bench(const UniformBenchSpec& spec) {
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> cases;
  Rng master(spec.seed);
  for (const auto& size : spec.sizes) {
    for (int i = 0; i < spec.instances; ++i) {
      cases.emplace_back(size, master.next_u64());
    }
  }
  struct Row {
    int n, k;
    long long yn, xe;
    double dp_ms, esa_ms;
    bool has_esa;
  };
  std::vector<Row> rows(cases.size());
  parallel_for(static_cast<long long>(cases.size()), resolve_jobs(spec.jobs),
               [&](long long i) {
                 const auto& [size, seed] = cases[static_cast<std::size_t>(i)];
                 const BicriteriaInstance instance =
                     gen_uniform(size.first, size.second, spec.beta, seed);
                 auto start = std::chrono::steady_clock::now();
                 const DpResult dp = dp_uniform(instance);
                 const double dp_ms = detail::elapsed_ms(start);
                 double esa_ms = 0.0;
                 bool has_esa = false;
                 if (instance.binary()) {
                   start = std::chrono::steady_clock::now();
                   const EsaResult esa = run_esa(instance);
                   esa_ms = detail::elapsed_ms(start);
                   has_esa = true;
                   if (esa.front.outcomes() != dp.nondominated) {
                     throw std::logic_error(
                         "swap and knapsack solvers disagree on a front");
                   }
                 }
                 rows[static_cast<std::size_t>(i)] = {
                     size.first,
                     size.second,
                     static_cast<long long>(dp.nondominated.size()),
                     static_cast<long long>(dp.efficient.bases.size()),
                     dp_ms,
                     esa_ms,
                     has_esa};
               });
  std::ostringstream out;
  out << "n,k,beta,yn,xe,dp_ms,esa_ms\n";
  for (const Row& row : rows) {
    out << row.n << ',' << row.k << ',' << spec.beta << ',' << row.yn << ','
        << row.xe << ',';
    detail::append_ms(out, row.dp_ms, spec.include_timings);
    out << ',';
    detail::append_ms(out, row.esa_ms, spec.include_timings && row.has_esa);
    out << '\n';
  }
  return out.str();
}

// Searches random instances for efficient sets whose exchange graph is
// disconnected (nc-instances). Ranks are cycled over {1, ..., n/2} so a
// batch covers every k, mirroring the cumulated counts of the reference
// experiment. For binary b the count is provably zero; larger b ranges
// make a nonzero count possible, so the row reports whatever was found.
struct BetaSearchSpec {
  int n = 20;
  std::vector<int> betas = {1, 2, 3, 4, 5, 6, 7};
  int instances = 10'000;
  std::uint64_t seed = 1;
  int jobs = 0;
  long long bases_budget = 5'000'000;
};

struct BetaSearchRow {
  int beta = 0;
  long long instances = 0;
  long long nc_count = 0;
  long long budget_skips = 0;
};

inline std::vector<BetaSearchRow> run_beta_search(const BetaSearchSpec& spec) {
  std::vector<BetaSearchRow> rows;
  const int k_hi = std::max(1, spec.n / 2);
  Rng master(spec.seed);
  for (const int beta : spec.betas) {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(spec.instances));
    for (auto& seed : seeds) seed = master.next_u64();
    std::atomic<long long> nc{0};
    std::atomic<long long> skips{0};
    DpOptions options;
    options.collect_all = true;
    options.max_total_bases = spec.bases_budget;
    parallel_for(spec.instances, resolve_jobs(spec.jobs), [&](long long i) {
      const int k = 1 + static_cast<int>(i % k_hi);
      const BicriteriaInstance instance = gen_uniform(
          spec.n, k, beta, seeds[static_cast<std::size_t>(i)]);
      try {
        const DpResult dp = dp_uniform(instance, options);
        const AdjacencyReport adjacency = adjacency_connected(dp.efficient.bases);
        if (!adjacency.connected) nc.fetch_add(1);
      } catch (const BudgetExceededError&) {
        skips.fetch_add(1);
      }
    });
    rows.push_back({beta, spec.instances, nc.load(), skips.load()});
  }
  return rows;
}

inline std::string beta_search_csv(const std::vector<BetaSearchRow>& rows) {
  std::ostringstream out;
  out << "beta,instances,nc_count,budget_skips\n";
  for (const BetaSearchRow& row : rows) {
    out << row.beta << ',' << row.instances << ',' << row.nc_count << ','
        << row.budget_skips << '\n';
  }
  return out.str();
}

}  // namespace matroidopt

#endif  // MATROIDOPT_EXPERIMENTS_HPP
