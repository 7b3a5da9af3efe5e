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

#ifndef MATROIDOPT_KNAPSACK_DP_HPP
#define MATROIDOPT_KNAPSACK_DP_HPP

#include <limits>
#include <vector>

#include "matroidopt/esa.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/pareto.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

// Optimal c value for one achievable b level, with every basis attaining it.
struct DpLevel {
  OutcomeVector outcome;
  std::vector<Basis> bases;
};

struct DpOptions {
  // With collect_all every optimal basis is recovered; otherwise one
  // representative per level.
  bool collect_all = true;
  long long max_total_bases = 5'000'000;
};

struct DpResult {
  std::vector<DpLevel> levels;              // b ascending, instance sense
  std::vector<OutcomeVector> nondominated;  // c ascending, instance sense
  EfficientSet efficient;  // all bases at non-dominated outcomes
  ParetoFront front;       // one representative per non-dominated outcome
};

// Exact sweep for uniform matroids over states (prefix, picked count, b sum),
// generalized to b in {0..beta}. Every optimum is recovered by walking all
// optimal predecessor decisions, which yields the complete efficient set.
inline DpResult dp_uniform(const BicriteriaInstance& instance,
                           DpOptions options = {}) {
  if (instance.kind() != MatroidKind::kUniform) {
    throw UsageError("the level sweep is defined for uniform matroids only");
  }
  const int n = instance.ground_size();
  const int k = instance.rank();
  const Sense sense = instance.sense();
  const auto& costs = instance.costs();

  int b_span = 0;
  for (const CostPair& cp : costs) b_span = std::max(b_span, cp.b);
  const int max_b = k * b_span;

  // value[i][t][s]: best c over t-subsets of the first i elements with b sum
  // s; sentinel marks unreachable states.
  const long long kUnset = sense == Sense::kMin
                               ? std::numeric_limits<long long>::max()
                               : std::numeric_limits<long long>::min();
  const auto better = [sense](long long a, long long b) {
    return sense == Sense::kMin ? std::min(a, b) : std::max(a, b);
  };
  const size_t stride_s = static_cast<size_t>(max_b) + 1;
  const size_t stride_t = static_cast<size_t>(k + 1) * stride_s;
  std::vector<long long> value(static_cast<size_t>(n + 1) * stride_t, kUnset);
  const auto cell = [&](int i, int t, int s) -> long long& {
    return value[static_cast<size_t>(i) * stride_t +
                 static_cast<size_t>(t) * stride_s + static_cast<size_t>(s)];
  };

  cell(0, 0, 0) = 0;
  for (int i = 1; i <= n; ++i) {
    const CostPair& cp = costs[static_cast<size_t>(i - 1)];
    for (int t = 0; t <= std::min(i, k); ++t) {
      for (int s = 0; s <= max_b; ++s) {
        long long best = cell(i - 1, t, s);  // element i-1 skipped
        if (t > 0 && s >= cp.b) {
          const long long prev = cell(i - 1, t - 1, s - cp.b);
          if (prev != kUnset) {
            best = best == kUnset ? prev + cp.c : better(best, prev + cp.c);
          }
        }
        cell(i, t, s) = best;
      }
    }
  }

  DpResult result;
  long long stored = 0;

  // Recover all bases for one level by walking optimal decisions backwards.
  std::vector<ElementId> chosen;
  auto backtrack = [&](auto&& self, int i, int t, int s, long long v,
                       std::vector<Basis>& out, bool all) -> void {
    if (!all && !out.empty()) return;
    if (i == 0) {
      out.emplace_back(std::vector<ElementId>(chosen.begin(), chosen.end()));
      if (++stored > options.max_total_bases) {
        throw BudgetExceededError("level sweep exceeded its basis budget");
      }
      return;
    }
    const CostPair& cp = costs[static_cast<size_t>(i - 1)];
    if (cell(i - 1, t, s) == v) {
      self(self, i - 1, t, s, v, out, all);
    }
    if (t > 0 && s >= cp.b && cell(i - 1, t - 1, s - cp.b) != kUnset &&
        cell(i - 1, t - 1, s - cp.b) + cp.c == v) {
      chosen.push_back(i - 1);
      self(self, i - 1, t - 1, s - cp.b, v - cp.c, out, all);
      chosen.pop_back();
    }
  };

  for (int s = 0; s <= max_b; ++s) {
    const long long v = cell(n, k, s);
    if (v == kUnset) continue;
    DpLevel level;
    level.outcome = OutcomeVector{v, s};
    backtrack(backtrack, n, k, s, v, level.bases, options.collect_all);
    result.levels.push_back(std::move(level));
  }

  std::vector<OutcomeVector> level_outcomes;
  level_outcomes.reserve(result.levels.size());
  for (const DpLevel& level : result.levels) {
    level_outcomes.push_back(level.outcome);
  }
  const ParetoFilterResult filtered = pareto_filter(level_outcomes, sense);
  for (size_t idx : filtered.nondominated) {
    const DpLevel& level = result.levels[idx];
    result.nondominated.push_back(level.outcome);
    for (const Basis& basis : level.bases) {
      result.efficient.bases.push_back(basis);
      result.efficient.outcomes.push_back(level.outcome);
    }
    result.front.points.push_back(ParetoPoint{level.outcome, level.bases[0]});
  }
  result.front.sense = sense;
  std::sort(result.nondominated.begin(), result.nondominated.end(),
            [](const OutcomeVector& a, const OutcomeVector& b) {
              return a.c < b.c;
            });
  std::sort(result.front.points.begin(), result.front.points.end(),
            [](const ParetoPoint& a, const ParetoPoint& b) {
              return a.outcome.c < b.outcome.c;
            });
  validate_front_shape(result.front);
  return result;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_KNAPSACK_DP_HPP
