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

#include <memory>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/fixtures.hpp"

namespace {

using namespace testsupport;

}  // namespace

TEST_CASE("swap sequence on the sample graph") {
  const BicriteriaInstance instance = seven_vertex_instance();
  const MinimizedProblem p = instance.minimized();
  const BasisPair pair = compute_basis_pair(p);

  const std::vector<ElementId> outside = {2, 10};
  const MatroidMinor swap_view = MatroidMinor(instance.matroid())
                                     .minus(outside)
                                     .contract(pair.common);
  SwapSequence swaps =
      generate_swap_sequence(p, swap_view, pair.reds_out, pair.greens_in);

  const SwapSequence expected = {{1, 7, 5}, {6, 4, 5}, {3, 5, 7}};
  REQUIRE(swaps == expected);

  sort_swaps(swaps, p.green_rank);
  REQUIRE(swaps == expected);
}

TEST_CASE("swap ordering breaks cost ties by green rank") {
  // Ranks: element 0 -> 0, element 1 -> 1, element 2 -> 2.
  const std::vector<int> green_rank = {0, 1, 2};
  SwapSequence swaps = {{9, 2, 4}, {8, 0, 4}, {7, 1, 3}};
  sort_swaps(swaps, green_rank);
  const SwapSequence expected = {{7, 1, 3}, {8, 0, 4}, {9, 2, 4}};
  REQUIRE(swaps == expected);
}

TEST_CASE("full run on the sample graph") {
  const BicriteriaInstance instance = seven_vertex_instance();
  const EsaResult result = run_esa(instance);

  REQUIRE(result.front.outcomes() == kSevenVertexFront);
  REQUIRE(result.front.points.size() == 4);
  REQUIRE(result.front.points[0].basis == tree_t2());
  REQUIRE(result.front.points[1].basis == tree_t3());
  REQUIRE(result.front.points[2].basis == tree_t4());
  REQUIRE(result.front.points[3].basis == tree_t5());

  REQUIRE(result.swaps.size() == 3);
  REQUIRE(result.swaps[0].cost == 5);
  REQUIRE(result.swaps[1].cost == 5);
  REQUIRE(result.swaps[2].cost == 7);
  REQUIRE(result.suppressed_nonpositive == 0);
  REQUIRE(result.pair.b_j == tree_t2());
  REQUIRE(result.pair.b_u == tree_t5());
}

TEST_CASE("single-colored instances collapse to one point") {
  SECTION("all green") {
    std::vector<GraphicMatroid::Edge> edges = {{1, 2}, {2, 3}, {1, 3}};
    std::vector<CostPair> costs = {{3, 0}, {1, 0}, {2, 0}};
    const BicriteriaInstance instance(
        std::make_shared<GraphicMatroid>(3, std::move(edges)), std::move(costs),
        Sense::kMin, MatroidKind::kGraphic, 1);
    const EsaResult result = run_esa(instance);
    REQUIRE(result.front.points.size() == 1);
    REQUIRE(result.front.points[0].outcome == OutcomeVector{3, 0});
    REQUIRE(result.swaps.empty());
  }
  SECTION("all red") {
    std::vector<CostPair> costs = {{4, 1}, {6, 1}, {5, 1}};
    const BicriteriaInstance instance(std::make_shared<UniformMatroid>(3, 2),
                                      std::move(costs), Sense::kMin,
                                      MatroidKind::kUniform, 1);
    const EsaResult result = run_esa(instance);
    REQUIRE(result.front.points.size() == 1);
    REQUIRE(result.front.points[0].outcome == OutcomeVector{9, 2});
  }
}

TEST_CASE("front matches brute force on random instances") {
  Rng rng(707);
  for (int trial = 0; trial < 60; ++trial) {
    const BicriteriaInstance instance =
        trial % 2 == 0 ? random_graphic_instance(rng, 4, 6, 10)
                       : random_uniform_instance(rng, 4, 14);
    if (instance.matroid().ground_size() > 16) continue;

    const EsaResult result = run_esa(instance);
    REQUIRE(result.front.outcomes() == brute_force_front(instance));

    // Each representative is independently re-verified: right size, truly
    // a basis, outcome as advertised.
    const MatroidMinor view(instance.matroid());
    for (const ParetoPoint& point : result.front.points) {
      REQUIRE(point.basis.size() == instance.rank());
      REQUIRE(view.is_independent(point.basis));
      REQUIRE(instance.outcome_of(point.basis.elements()) == point.outcome);
    }
  }
}

TEST_CASE("swap costs stay positive and non-decreasing across a corpus") {
  Rng rng(808);
  for (int trial = 0; trial < 40; ++trial) {
    const BicriteriaInstance instance = random_graphic_instance(rng, 4, 8, 6);
    const EsaResult result = run_esa(instance);
    REQUIRE(result.suppressed_nonpositive == 0);
    for (size_t i = 0; i < result.swaps.size(); ++i) {
      REQUIRE(result.swaps[i].cost > 0);
      if (i > 0) REQUIRE(result.swaps[i].cost >= result.swaps[i - 1].cost);
    }
    // One swap per front step, each dropping b by exactly 1.
    const auto outcomes = result.front.outcomes();
    REQUIRE(result.swaps.size() + 1 == outcomes.size());
    for (size_t i = 1; i < outcomes.size(); ++i) {
      REQUIRE(outcomes[i].c - outcomes[i - 1].c == result.swaps[i - 1].cost);
      REQUIRE(outcomes[i - 1].b - outcomes[i].b == 1);
    }
  }
}

TEST_CASE("maximization instances map through the same machinery") {
  Rng rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    const BicriteriaInstance instance = random_uniform_instance(rng, 4, 14);
    REQUIRE(instance.sense() == Sense::kMax);
    const EsaResult result = run_esa(instance);
    REQUIRE(result.front.sense == Sense::kMax);
    REQUIRE(result.front.outcomes() == brute_force_front(instance));
    // Reported in instance sense: c strictly ascending, b strictly falling.
    const auto outcomes = result.front.outcomes();
    for (size_t i = 1; i < outcomes.size(); ++i) {
      REQUIRE(outcomes[i].c > outcomes[i - 1].c);
      REQUIRE(outcomes[i].b < outcomes[i - 1].b);
    }
  }
}

TEST_CASE("swap algorithm rejects non-binary b") {
  std::vector<CostPair> costs = {{1, 0}, {2, 2}, {3, 1}};
  const BicriteriaInstance instance(std::make_shared<UniformMatroid>(3, 2),
                                    std::move(costs), Sense::kMax,
                                    MatroidKind::kUniform, 2);
  REQUIRE_THROWS_AS(run_esa(instance), UsageError);
}
