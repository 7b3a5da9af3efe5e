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

#ifndef MATROIDOPT_TESTS_SUPPORT_FIXTURES_HPP
#define MATROIDOPT_TESTS_SUPPORT_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matroidopt/matroidopt.hpp"

namespace testsupport {

using namespace matroidopt;

inline std::string data_path(const std::string& name) {
  return std::string(MATROIDOPT_DATA_DIR) + "/" + name;
}

// Seven-vertex, eleven-edge minimization instance with a four-point
// front. Edge ids are fixed by construction order and referenced all
// over the expectations below.
inline BicriteriaInstance seven_vertex_instance() {
  std::vector<GraphicMatroid::Edge> edges = {
      {1, 2}, {2, 3}, {1, 4}, {2, 4}, {4, 5}, {2, 5},
      {5, 6}, {2, 6}, {3, 6}, {3, 7}, {6, 7},
  };
  std::vector<CostPair> costs = {
      {1, 1}, {2, 1}, {4, 1}, {2, 1}, {8, 0}, {9, 0},
      {3, 1}, {7, 0}, {5, 0}, {4, 0}, {6, 1},
  };
  return BicriteriaInstance(
      std::make_shared<GraphicMatroid>(7, std::move(edges)), std::move(costs),
      Sense::kMin, MatroidKind::kGraphic, 1);
}

inline const std::vector<OutcomeVector> kSevenVertexFront = {
    {17, 4}, {22, 3}, {27, 2}, {34, 1}};

inline Basis tree_t1() { return Basis({0, 1, 3, 6, 9, 10}); }
inline Basis tree_t2() { return Basis({0, 1, 3, 6, 8, 9}); }
inline Basis tree_t3() { return Basis({0, 3, 6, 7, 8, 9}); }
inline Basis tree_t4() { return Basis({0, 3, 4, 7, 8, 9}); }
inline Basis tree_t5() { return Basis({0, 4, 5, 7, 8, 9}); }

// Pick 3 of 6 items, maximize (profit, bonus), bonus range {0,1,2}.
// Its front has exactly one unsupported point.
inline BicriteriaInstance knapsack_table_instance() {
  std::vector<CostPair> costs = {{6, 0}, {5, 0}, {2, 0},
                                 {2, 1}, {2, 2}, {0, 2}};
  return BicriteriaInstance(std::make_shared<UniformMatroid>(6, 3),
                            std::move(costs), Sense::kMax,
                            MatroidKind::kUniform, 2);
}

inline BicriteriaInstance random_graphic_instance(Rng& rng, int n_lo, int n_hi,
                                                  long long c_max = 25) {
  const int n = static_cast<int>(rng.uniform_int(n_lo, n_hi));
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  const int m = static_cast<int>(rng.uniform_int(n - 1, max_edges));
  return gen_graphic(n, m, c_max, rng.next_u64());
}

inline BicriteriaInstance random_uniform_instance(Rng& rng, int n_lo, int n_hi,
                                                  int beta = 1) {
  const int n = static_cast<int>(rng.uniform_int(n_lo, n_hi));
  const int k = static_cast<int>(rng.uniform_int(1, std::max(1, n / 2)));
  return gen_uniform(n, k, beta, rng.next_u64());
}

// Every basis by brute force over bit masks; usable while the ground set
// fits in a machine word (tests stay at or below ~20 elements). This is
// deliberately independent of the library's enumeration walk.
inline std::vector<Basis> mask_bases(const Matroid& matroid, int rank) {
  const int m = matroid.ground_size();
  std::vector<Basis> bases;
  if (rank == 0 || rank > m) return bases;
  const std::uint64_t limit = 1ULL << m;
  std::uint64_t mask = (1ULL << rank) - 1;
  std::vector<ElementId> elems;
  while (mask < limit) {
    elems.clear();
    for (int e = 0; e < m; ++e) {
      if (mask & (1ULL << e)) elems.push_back(e);
    }
    if (matroid.is_independent(elems)) bases.emplace_back(elems);
    const std::uint64_t low = mask & (0 - mask);
    const std::uint64_t carry = mask + low;
    mask = carry | (((carry ^ mask) >> 2) / low);
  }
  return bases;
}

// Quadratic dominance filter over per-basis outcomes; the slow reference
// the production filter and solvers are checked against.
inline std::vector<OutcomeVector> brute_force_front(
    const BicriteriaInstance& instance) {
  const std::vector<Basis> bases =
      mask_bases(instance.matroid(), instance.rank());
  std::vector<OutcomeVector> outcomes;
  outcomes.reserve(bases.size());
  for (const Basis& basis : bases) {
    outcomes.push_back(instance.outcome_of(basis.elements()));
  }
  std::vector<OutcomeVector> front;
  for (const OutcomeVector& y : outcomes) {
    bool beaten = false;
    for (const OutcomeVector& other : outcomes) {
      if (dominates(other, y, instance.sense())) {
        beaten = true;
        break;
      }
    }
    if (!beaten) front.push_back(y);
  }
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());
  return front;
}

}  // namespace testsupport

#endif  // MATROIDOPT_TESTS_SUPPORT_FIXTURES_HPP
