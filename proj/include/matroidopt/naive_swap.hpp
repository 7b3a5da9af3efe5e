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

#ifndef MATROIDOPT_NAIVE_SWAP_HPP
#define MATROIDOPT_NAIVE_SWAP_HPP

#include <limits>
#include <stdexcept>
#include <vector>

#include "matroidopt/esa.hpp"
#include "matroidopt/greedy.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

struct NaiveResult {
  // One basis per green count l..u, outcomes in the instance's own sense.
  std::vector<ParetoPoint> sequence;
  SwapSequence swaps;  // applied swaps, minimization space
  ParetoFront front;   // suffix of the sequence from the last cost minimum
};

// Reference solver: start from the basis with the fewest green elements and
// repeatedly apply the cheapest red-out/green-in exchange, scanning every
// candidate through fundamental circuits. Quadratic and only meant as an
// oracle for the swap pipeline.
inline NaiveResult naive_minimal_swap_solver(const BicriteriaInstance& inst) {
  const MinimizedProblem p = inst.minimized();
  MatroidMinor view(*p.matroid);

  // Red-first greedy: maximizes the red count, i.e. lands on the minimum
  // green count l, with minimum c among those bases.
  Basis current = min_weight_basis(view, [&p](ElementId x, ElementId y) {
    if (p.b(x) != p.b(y)) return p.b(x) > p.b(y);
    return p.c(x) < p.c(y);
  });

  NaiveResult result;
  SwapSequence min_space_swaps;
  std::vector<ParetoPoint> min_space_seq;
  min_space_seq.push_back(
      ParetoPoint{p.outcome_of(current.elements()), current});

  const long long kNoSwap = std::numeric_limits<long long>::max();
  while (true) {
    Swap best{-1, -1, kNoSwap};
    for (ElementId g : p.greens) {
      if (current.contains(g)) continue;
      for (ElementId e : view.fundamental_circuit(current, g)) {
        if (e == g || p.green(e)) continue;
        const long long cost = p.c(g) - p.c(e);
        const bool improves =
            cost < best.cost ||
            (cost == best.cost && best.in >= 0 &&
             (p.green_rank[static_cast<size_t>(g)] <
                  p.green_rank[static_cast<size_t>(best.in)] ||
              (g == best.in && e < best.out)));
        if (best.in < 0 || improves) best = Swap{e, g, cost};
      }
    }
    if (best.in < 0) break;  // no red element can leave: green count is u
    if (!min_space_swaps.empty() && best.cost < min_space_swaps.back().cost) {
      throw std::logic_error("minimal swap costs decreased along the walk");
    }
    current = current.with_swap(best.out, best.in);
    min_space_swaps.push_back(best);
    min_space_seq.push_back(
        ParetoPoint{p.outcome_of(current.elements()), current});
  }

  // The front is the suffix that starts at the last minimum-cost basis.
  size_t j_idx = 0;
  for (size_t i = 1; i < min_space_seq.size(); ++i) {
    if (min_space_seq[i].outcome.c <= min_space_seq[j_idx].outcome.c) {
      j_idx = i;
    }
  }
  ParetoFront min_front;
  for (size_t i = j_idx; i < min_space_seq.size(); ++i) {
    min_front.points.push_back(min_space_seq[i]);
  }
  validate_front_shape(min_front);

  result.swaps = std::move(min_space_swaps);
  result.front.sense = p.original_sense;
  if (p.original_sense == Sense::kMin) {
    result.sequence = std::move(min_space_seq);
    result.front.points = std::move(min_front.points);
  } else {
    for (ParetoPoint& pt : min_space_seq) {
      result.sequence.push_back(
          ParetoPoint{p.to_original(pt.outcome), std::move(pt.basis)});
    }
    for (auto it = min_front.points.rbegin(); it != min_front.points.rend();
         ++it) {
      result.front.points.push_back(
          ParetoPoint{p.to_original(it->outcome), it->basis});
    }
    validate_front_shape(result.front);
  }
  return result;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_NAIVE_SWAP_HPP
