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

#ifndef MATROIDOPT_PARETO_HPP
#define MATROIDOPT_PARETO_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "matroidopt/disjoint_sets.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

// All bases whose outcome no feasible basis dominates. Several bases may
// share one outcome; `outcomes` runs parallel to `bases`.
struct EfficientSet {
  std::vector<Basis> bases;
  std::vector<OutcomeVector> outcomes;

  size_t size() const { return bases.size(); }
};

struct ParetoFilterResult {
  std::vector<size_t> nondominated;         // indices, dominance filter
  std::vector<size_t> weakly_nondominated;  // indices, strong-dominance filter
};

// Index filter over outcome vectors. An entry survives `nondominated` iff no
// other entry's outcome dominates it (componentwise at least as good and
// different as a vector); duplicates of a surviving outcome all survive.
// `weakly_nondominated` keeps entries no entry strongly dominates.
inline ParetoFilterResult pareto_filter(std::span<const OutcomeVector> ys,
                                        Sense sense) {
  ParetoFilterResult result;
  if (ys.empty()) return result;
  const auto key = [sense](const OutcomeVector& y) -> OutcomeVector {
    return sense == Sense::kMin ? y : OutcomeVector{-y.c, -y.b};
  };
  std::vector<size_t> order(ys.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return key(ys[a]) < key(ys[b]);
  });

  long long best_b = std::numeric_limits<long long>::max();  // over smaller c
  size_t i = 0;
  while (i < order.size()) {
    // Group of equal c in minimization coordinates, b ascending.
    size_t j = i;
    const long long c_group = key(ys[order[i]]).c;
    while (j < order.size() && key(ys[order[j]]).c == c_group) ++j;
    const long long b_min = key(ys[order[i]]).b;
    for (size_t t = i; t < j; ++t) {
      const long long b = key(ys[order[t]]).b;
      if (b == b_min && b < best_b) result.nondominated.push_back(order[t]);
      if (b <= best_b) result.weakly_nondominated.push_back(order[t]);
    }
    best_b = std::min(best_b, b_min);
    i = j;
  }
  std::sort(result.nondominated.begin(), result.nondominated.end());
  std::sort(result.weakly_nondominated.begin(),
            result.weakly_nondominated.end());
  return result;
}

enum class Supportedness {
  kExtreme,      // vertex of the convex hull of the front
  kSupported,    // on a hull edge between extreme points
  kUnsupported   // strictly inside
};

namespace detail {

inline __int128 cross(long long ox, long long oy, long long ax, long long ay,
                      long long bx, long long by) {
  return static_cast<__int128>(ax - ox) * (by - oy) -
         static_cast<__int128>(ay - oy) * (bx - ox);
}

}  // namespace detail

// Classifies each point of a non-dominated front (sorted by c ascending)
// against the convex hull of the front, with exact integer arithmetic.
// Supported points are optimal for some positive weighted sum; the extreme
// ones are the hull vertices.
inline std::vector<Supportedness> classify_supported(
    std::span<const OutcomeVector> front, Sense sense) {
  std::vector<Supportedness> labels(front.size(), Supportedness::kUnsupported);
  if (front.empty()) return labels;
  if (front.size() <= 2) {
    if (front.size() == 2 && front[0].c == front[1].c) {
      throw InputError("support classification needs distinct c values");
    }
    std::fill(labels.begin(), labels.end(), Supportedness::kExtreme);
    return labels;
  }

  // Minimization coordinates, x-sorted; `at` maps back to input positions.
  std::vector<std::pair<long long, long long>> pts;
  std::vector<size_t> at(front.size());
  std::iota(at.begin(), at.end(), size_t{0});
  pts.reserve(front.size());
  for (const OutcomeVector& y : front) {
    if (sense == Sense::kMin) {
      pts.emplace_back(y.c, static_cast<long long>(y.b));
    } else {
      pts.emplace_back(-y.c, -static_cast<long long>(y.b));
    }
  }
  std::sort(at.begin(), at.end(),
            [&pts](size_t a, size_t b) { return pts[a] < pts[b]; });
  {
    std::vector<std::pair<long long, long long>> sorted;
    sorted.reserve(pts.size());
    for (size_t idx : at) sorted.push_back(pts[idx]);
    pts = std::move(sorted);
  }
  for (size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first)) {
      throw InputError("support classification needs distinct c values");
    }
  }

  // Lower convex hull; collinear middle points are popped so the stack holds
  // exactly the extreme points.
  std::vector<size_t> hull;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (hull.size() >= 2) {
      const auto& o = pts[hull[hull.size() - 2]];
      const auto& a = pts[hull[hull.size() - 1]];
      if (detail::cross(o.first, o.second, a.first, a.second, pts[i].first,
                        pts[i].second) <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(i);
  }

  std::vector<Supportedness> sorted_labels(pts.size(),
                                           Supportedness::kUnsupported);
  for (size_t h : hull) sorted_labels[h] = Supportedness::kExtreme;
  size_t seg = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (sorted_labels[i] == Supportedness::kExtreme) continue;
    while (seg + 1 < hull.size() && pts[hull[seg + 1]].first < pts[i].first) {
      ++seg;
    }
    const auto& a = pts[hull[seg]];
    const auto& b = pts[hull[seg + 1]];
    if (detail::cross(a.first, a.second, b.first, b.second, pts[i].first,
                      pts[i].second) == 0) {
      sorted_labels[i] = Supportedness::kSupported;
    }
  }
  for (size_t i = 0; i < pts.size(); ++i) labels[at[i]] = sorted_labels[i];
  return labels;
}

struct AdjacencyReport {
  bool connected = false;
  int components = 0;
  long long nodes = 0;
  long long edges = 0;
};

// Adjacency between bases means exchanging exactly one element. Reports
// whether the efficient set forms one connected component under that
// relation.
inline AdjacencyReport adjacency_connected(std::span<const Basis> bases) {
  if (bases.empty()) {
    throw InputError("connectivity of an empty basis set is undefined");
  }
  AdjacencyReport report;
  report.nodes = static_cast<long long>(bases.size());
  DisjointSets dsu(static_cast<int>(bases.size()));
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = i + 1; j < bases.size(); ++j) {
      if (intersection_size(bases[i].elements(), bases[j].elements()) ==
          bases[i].size() - 1) {
        ++report.edges;
        dsu.unite(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  report.components = dsu.components();
  report.connected = report.components == 1;
  return report;
}

inline AdjacencyReport adjacency_connected(const EfficientSet& set) {
  return adjacency_connected(std::span<const Basis>(set.bases));
}

}  // namespace matroidopt

#endif  // MATROIDOPT_PARETO_HPP
