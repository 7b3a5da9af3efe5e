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

#ifndef MATROIDOPT_GENERATORS_HPP
#define MATROIDOPT_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "matroidopt/instance.hpp"
#include "matroidopt/matroids.hpp"
#include "matroidopt/rng.hpp"

namespace matroidopt {

// Random connected simple graph with binary b, minimization sense.
// Construction: random attachment tree over vertices 1..n, then the
// requested surplus of distinct non-tree pairs via a partial shuffle.
// Costs are drawn uniformly from {1, ..., c_max} and shifted so the
// smallest edge cost is exactly 0. Deterministic under `seed`.
inline BicriteriaInstance gen_graphic(int n, int m, long long c_max,
                                      std::uint64_t seed) {
  if (n < 2) throw InputError("graphic generator needs at least 2 vertices");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_edges) {
    throw InputError("edge count must lie in [n-1, n(n-1)/2]");
  }
  if (c_max < 1) throw InputError("c_max must be positive");

  Rng rng(seed);
  std::vector<GraphicMatroid::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int v = 2; v <= n; ++v) {
    const int parent = static_cast<int>(rng.uniform_int(1, v - 1));
    edges.push_back({parent, v});
  }

  const int extra = m - (n - 1);
  if (extra > 0) {
    std::vector<std::pair<int, int>> pool;
    pool.reserve(static_cast<std::size_t>(max_edges) - edges.size());
    std::vector<std::vector<bool>> used(
        static_cast<std::size_t>(n) + 1,
        std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (const auto& e : edges) {
      used[static_cast<std::size_t>(std::min(e.u, e.v))]
          [static_cast<std::size_t>(std::max(e.u, e.v))] = true;
    }
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (!used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          pool.emplace_back(u, v);
        }
      }
    }
    // Partial Fisher-Yates: only the first `extra` slots are settled.
    for (int i = 0; i < extra; ++i) {
      const std::size_t j =
          static_cast<std::size_t>(i) +
          static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
      edges.push_back({pool[static_cast<std::size_t>(i)].first,
                       pool[static_cast<std::size_t>(i)].second});
    }
  }

  std::vector<CostPair> costs(static_cast<std::size_t>(m));
  long long c_min = c_max;
  for (auto& cost : costs) {
    cost.c = rng.uniform_int(1, c_max);
    c_min = std::min(c_min, cost.c);
  }
  for (auto& cost : costs) {
    cost.c -= c_min;
    cost.b = static_cast<int>(rng.below(2));
  }

  auto matroid = std::make_shared<GraphicMatroid>(n, std::move(edges));
  return BicriteriaInstance(std::move(matroid), std::move(costs), Sense::kMin,
                            MatroidKind::kGraphic, 1);
}

// Random cardinality-constrained selection instance (uniform matroid,
// maximization). Profits c are drawn from {0, ..., 10n} and sorted
// non-decreasing; b values are drawn from {0, ..., beta} and sorted
// non-increasing, giving the monotone coupling the knapsack solver and
// the swap solver both expect to handle. Deterministic under `seed`.
inline BicriteriaInstance gen_uniform(int n, int k, int beta,
                                      std::uint64_t seed) {
  if (n < 1) throw InputError("uniform generator needs at least 1 element");
  if (k < 1 || k > n) throw InputError("k must lie in [1, n]");
  if (beta < 1) throw InputError("beta must be at least 1");

  Rng rng(seed);
  std::vector<long long> c(static_cast<std::size_t>(n));
  for (auto& value : c) {
    value = rng.uniform_int(0, 10LL * n);
  }
  std::vector<int> b(static_cast<std::size_t>(n));
  for (auto& value : b) {
    value = static_cast<int>(rng.below(static_cast<std::uint64_t>(beta) + 1));
  }
  std::sort(c.begin(), c.end());
  std::sort(b.begin(), b.end(), std::greater<int>());

  std::vector<CostPair> costs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < costs.size(); ++i) {
    costs[i] = {c[i], b[i]};
  }
  auto matroid = std::make_shared<UniformMatroid>(n, k);
  return BicriteriaInstance(std::move(matroid), std::move(costs), Sense::kMax,
                            MatroidKind::kUniform, beta);
}

}  // namespace matroidopt

#endif  // MATROIDOPT_GENERATORS_HPP
