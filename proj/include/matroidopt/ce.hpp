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

#ifndef MATROIDOPT_CE_HPP
#define MATROIDOPT_CE_HPP

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "matroidopt/enumerate.hpp"
#include "matroidopt/esa.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/pareto.hpp"

namespace matroidopt {

struct CeOptions {
  // Abort with BudgetExceededError past this many bases (-1 = unlimited).
  long long max_bases = 10'000'000;
  // Also collect every basis that attains an optimal outcome.
  bool collect_efficient = false;
};

struct CeResult {
  long long n_bases = 0;
  // Nondominated outcomes, sorted by c ascending.
  std::vector<OutcomeVector> nondominated;
  // One representative basis per nondominated outcome.
  ParetoFront front;
  // All optimal bases, grouped behind `outcomes`; empty unless requested.
  EfficientSet efficient;
};

// Reference solver: enumerate every basis and filter the outcomes.
// Works for any b range and either sense; intended as a correctness
// oracle for the swap-based solvers, not for large instances.
inline CeResult solve_by_enumeration(const BicriteriaInstance& instance,
                                     const CeOptions& options = {}) {
  struct Level {
    long long best_c = 0;
    Basis representative;
    std::vector<Basis> all;
  };
  const bool maximize = instance.sense() == Sense::kMax;
  std::map<int, Level> levels;
  CeResult result;
  auto visit = [&](std::span<const ElementId> elems) {
    ++result.n_bases;
    const OutcomeVector y = instance.outcome_of(elems);
    auto [it, inserted] = levels.try_emplace(y.b);
    Level& level = it->second;
    const bool better =
        inserted || (maximize ? y.c > level.best_c : y.c < level.best_c);
    if (better) {
      level.best_c = y.c;
      level.representative = Basis(std::vector<ElementId>(elems.begin(), elems.end()));
      level.all.clear();
    }
    if (options.collect_efficient && y.c == level.best_c) {
      level.all.emplace_back(std::vector<ElementId>(elems.begin(), elems.end()));
    }
  };
  enumerate_bases(instance.matroid(), instance.kind(), visit, options.max_bases);
  if (levels.empty()) {
    throw InfeasibleError("matroid has no basis");
  }

  std::vector<OutcomeVector> outcomes;
  outcomes.reserve(levels.size());
  for (const auto& [b, level] : levels) {
    outcomes.push_back({level.best_c, b});
  }
  const ParetoFilterResult filtered = pareto_filter(outcomes, instance.sense());

  std::vector<std::pair<OutcomeVector, const Level*>> picked;
  picked.reserve(filtered.nondominated.size());
  for (std::size_t idx : filtered.nondominated) {
    auto it = levels.find(outcomes[idx].b);
    picked.emplace_back(outcomes[idx], &it->second);
  }
  std::sort(picked.begin(), picked.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

  result.front.sense = instance.sense();
  for (const auto& [y, level] : picked) {
    result.nondominated.push_back(y);
    result.front.points.push_back({y, level->representative});
    if (options.collect_efficient) {
      for (const Basis& basis : level->all) {
        result.efficient.bases.push_back(basis);
        result.efficient.outcomes.push_back(y);
      }
    }
  }
  validate_front_shape(result.front);
  return result;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_CE_HPP
