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

#ifndef MATROIDOPT_TREE_COUNT_HPP
#define MATROIDOPT_TREE_COUNT_HPP

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroidopt/matroids.hpp"

namespace matroidopt {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

// Determinant of a dense integer matrix by Bareiss fraction-free
// elimination. All intermediate divisions are exact, so the result is
// computed without rationals. Destroys `a`.
inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return BigInt(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? BigInt(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace detail

// Number of spanning trees via the matrix-tree theorem: any cofactor of
// the graph Laplacian. Parallel edges contribute multiplicity; self-loops
// never appear in a tree and are ignored. Returns 0 when the graph is
// disconnected.
inline BigInt count_spanning_trees(const GraphicMatroid& graph) {
  const int n = graph.n_vertices();
  if (n <= 1) return BigInt(1);
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  std::vector<std::vector<BigInt>> lap(dim, std::vector<BigInt>(dim, 0));
  // Vertices are 1-based; drop the row/column of vertex n.
  for (ElementId e = 0; e < graph.ground_size(); ++e) {
    const auto& edge = graph.edge(e);
    if (edge.u == edge.v) continue;
    const std::size_t u = static_cast<std::size_t>(edge.u) - 1;
    const std::size_t v = static_cast<std::size_t>(edge.v) - 1;
    if (u < dim) lap[u][u] += 1;
    if (v < dim) lap[v][v] += 1;
    if (u < dim && v < dim) {
      lap[u][v] -= 1;
      lap[v][u] -= 1;
    }
  }
  return detail::bareiss_determinant(lap);
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Exact basis count for the built-in matroid classes.
inline BigInt count_bases(const Matroid& matroid, MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return count_spanning_trees(dynamic_cast<const GraphicMatroid&>(matroid));
    case MatroidKind::kUniform: {
      const auto& u = dynamic_cast<const UniformMatroid&>(matroid);
      return binomial(u.ground_size(), u.k());
    }
    case MatroidKind::kPartition: {
      const auto& p = dynamic_cast<const PartitionMatroid&>(matroid);
      BigInt total = 1;
      for (std::size_t block = 0; block < p.block_count(); ++block) {
        const int size = p.block_size(static_cast<int>(block));
        const int take = std::min(size, p.block_bound(static_cast<int>(block)));
        total *= binomial(size, take);
      }
      return total;
    }
  }
  return BigInt(0);
}

}  // namespace matroidopt

#endif  // MATROIDOPT_TREE_COUNT_HPP
