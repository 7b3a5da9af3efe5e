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

#ifndef MATROIDOPT_ESA_HPP
#define MATROIDOPT_ESA_HPP

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "matroidopt/greedy.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

// One exchange step: remove the red element `out`, add the green element
// `in`. Costs are minimization-space c differences.
struct Swap {
  ElementId out = -1;
  ElementId in = -1;
  long long cost = 0;

  friend bool operator==(const Swap&, const Swap&) = default;
};

using SwapSequence = std::vector<Swap>;

struct ParetoPoint {
  OutcomeVector outcome;
  Basis basis;
};

// Non-dominated outcomes with one representative basis each, ordered by
// strictly increasing c and strictly decreasing b in the instance's sense.
struct ParetoFront {
  Sense sense = Sense::kMin;
  std::vector<ParetoPoint> points;

  std::vector<OutcomeVector> outcomes() const {
    std::vector<OutcomeVector> ys;
    ys.reserve(points.size());
    for (const ParetoPoint& pt : points) ys.push_back(pt.outcome);
    return ys;
  }
};

inline void validate_front_shape(const ParetoFront& front) {
  for (size_t i = 1; i < front.points.size(); ++i) {
    const OutcomeVector& prev = front.points[i - 1].outcome;
    const OutcomeVector& cur = front.points[i].outcome;
    if (!(cur.c > prev.c && cur.b < prev.b)) {
      throw std::logic_error("front lost its staircase shape");
    }
  }
}

// Recursive swap-sequence generation. `reds` (J) and `greens` (U) are both
// bases of `minor` and partition its ground set; the result matches each
// green element with a distinct red one such that applying the swaps in cost
// order walks through one minimum-cost basis per green count.
inline SwapSequence generate_swap_sequence(const MinimizedProblem& p,
                                           const MatroidMinor& minor,
                                           std::span<const ElementId> reds,
                                           std::span<const ElementId> greens) {
  if (reds.size() != greens.size() || reds.empty()) {
    throw std::logic_error("swap recursion needs |J| = |U| >= 1");
  }
  if (greens.size() == 1) {
    return {Swap{reds[0], greens[0], p.c(greens[0]) - p.c(reds[0])}};
  }

  // Split U by cost (global green order) and take the cheap half first.
  std::vector<ElementId> u_sorted(greens.begin(), greens.end());
  std::sort(u_sorted.begin(), u_sorted.end(),
            [&p](ElementId a, ElementId b) {
              if (p.c(a) != p.c(b)) return p.c(a) < p.c(b);
              return a < b;
            });
  const size_t half = u_sorted.size() / 2;
  std::vector<ElementId> u1(u_sorted.begin(), u_sorted.begin() + half);
  std::vector<ElementId> u2(u_sorted.begin() + half, u_sorted.end());
  std::sort(u1.begin(), u1.end());
  std::sort(u2.begin(), u2.end());

  // J_1: cheap red completion of U_1, so that J_1 cup U_1 is the minimum-cost
  // basis among those whose green part is exactly U_1.
  std::vector<ElementId> j_order(reds.begin(), reds.end());
  std::sort(j_order.begin(), j_order.end(), [&p](ElementId a, ElementId b) {
    if (p.c(a) != p.c(b)) return p.c(a) < p.c(b);
    return a < b;
  });
  const MatroidMinor completion_view = minor.minus(u2).contract(u1);
  const Basis j1_basis = greedy_scan(completion_view, j_order);
  const std::vector<ElementId>& j1 = j1_basis.elements();
  std::vector<ElementId> j_all(reds.begin(), reds.end());
  std::sort(j_all.begin(), j_all.end());
  const std::vector<ElementId> j2 = sorted_difference(j_all, j1);
  if (j1.size() != u2.size() || j2.size() != u1.size()) {
    throw std::logic_error("swap recursion split sizes disagree");
  }

  SwapSequence left =
      generate_swap_sequence(p, minor.minus(u2).contract(j1), j2, u1);
  SwapSequence right =
      generate_swap_sequence(p, minor.minus(j2).contract(u1), j1, u2);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// Sorts by cost, breaking ties by the global rank of the incoming green
// element. Ranks are a bijection, so the order is total.
inline void sort_swaps(SwapSequence& swaps, std::span<const int> green_rank) {
  std::stable_sort(swaps.begin(), swaps.end(),
                   [green_rank](const Swap& a, const Swap& b) {
                     if (a.cost != b.cost) return a.cost < b.cost;
                     return green_rank[static_cast<size_t>(a.in)] <
                            green_rank[static_cast<size_t>(b.in)];
                   });
}

struct EsaResult {
  ParetoFront front;     // instance sense
  SwapSequence swaps;    // minimization space, sorted
  BasisPair pair;        // minimization space
  // Swaps with non-positive cost cannot occur when b_j is lex-optimal; any
  // encountered are applied without emitting a point and counted here.
  int suppressed_nonpositive = 0;
};

// Full pipeline on the canonical minimization problem.
inline EsaResult run_esa_min(const MinimizedProblem& p) {
  EsaResult result;
  result.pair = compute_basis_pair(p);
  const Basis& b_j = result.pair.b_j;
  const Basis& b_u = result.pair.b_u;

  MatroidMinor base_view(*p.matroid);
  const auto verify_basis = [&](const Basis& basis) {
    if (basis.size() != p.rank || !base_view.is_independent(basis)) {
      throw std::logic_error("emitted basis failed verification");
    }
  };

  ParetoFront min_front;
  if (b_j == b_u) {
    verify_basis(b_j);
    min_front.points.push_back(
        ParetoPoint{p.outcome_of(b_j.elements()), b_j});
  } else {
    const std::vector<ElementId> outside = [&] {
      std::vector<ElementId> in_either =
          sorted_union(b_j.elements(), b_u.elements());
      std::vector<ElementId> all(static_cast<size_t>(p.matroid->ground_size()));
      for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
      return sorted_difference(all, in_either);
    }();
    const MatroidMinor swap_view =
        MatroidMinor(*p.matroid).minus(outside).contract(result.pair.common);

    result.swaps = generate_swap_sequence(p, swap_view, result.pair.reds_out,
                                          result.pair.greens_in);
    sort_swaps(result.swaps, p.green_rank);
    for (size_t i = 1; i < result.swaps.size(); ++i) {
      if (result.swaps[i].cost < result.swaps[i - 1].cost) {
        throw std::logic_error("swap costs are not non-decreasing");
      }
    }

    Basis current = b_j;
    OutcomeVector y = p.outcome_of(current.elements());
    size_t next = 0;
    while (next < result.swaps.size() && result.swaps[next].cost <= 0) {
      const Swap& s = result.swaps[next];
      current = current.with_swap(s.out, s.in);
      y.c += s.cost;
      y.b -= 1;
      ++result.suppressed_nonpositive;
      ++next;
    }
    verify_basis(current);
    min_front.points.push_back(ParetoPoint{y, current});
    for (; next < result.swaps.size(); ++next) {
      const Swap& s = result.swaps[next];
      current = current.with_swap(s.out, s.in);
      y.c += s.cost;
      y.b -= 1;
      verify_basis(current);
      min_front.points.push_back(ParetoPoint{y, current});
    }
  }

  if (min_front.points.size() > static_cast<size_t>(p.rank) + 1) {
    throw std::logic_error("front has more points than rank + 1");
  }
  validate_front_shape(min_front);

  // Map to the instance's own sense.
  result.front.sense = p.original_sense;
  result.front.points.reserve(min_front.points.size());
  if (p.original_sense == Sense::kMin) {
    result.front.points = std::move(min_front.points);
  } else {
    for (auto it = min_front.points.rbegin(); it != min_front.points.rend();
         ++it) {
      result.front.points.push_back(
          ParetoPoint{p.to_original(it->outcome), std::move(it->basis)});
    }
    validate_front_shape(result.front);
  }
  return result;
}

inline EsaResult run_esa(const BicriteriaInstance& instance) {
  return run_esa_min(instance.minimized());
}

}  // namespace matroidopt

#endif  // MATROIDOPT_ESA_HPP
