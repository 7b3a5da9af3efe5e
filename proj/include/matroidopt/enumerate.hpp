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

#ifndef MATROIDOPT_ENUMERATE_HPP
#define MATROIDOPT_ENUMERATE_HPP

#include <functional>
#include <span>
#include <vector>

#include "matroidopt/disjoint_sets.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/matroids.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

using BasisVisitor = std::function<void(std::span<const ElementId>)>;

namespace detail {

// Contraction/deletion recursion over the edge list. Including an edge
// merges its endpoints; excluding one is only explored when the remaining
// edges still connect the current components, so every leaf is a tree and
// each tree is reached exactly once.
class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(const GraphicMatroid& graph, const BasisVisitor& visit,
                         long long budget)
      : graph_(graph),
        visit_(visit),
        budget_(budget),
        dsu_(graph.n_vertices() + 1),
        scratch_(0) {}

  long long run() {
    const int n = graph_.n_vertices();
    if (n == 1) {
      ++count_;
      if (visit_) visit_(picked_);
      return count_;
    }
    if (!graph_.is_connected()) return 0;
    picked_.reserve(static_cast<size_t>(n) - 1);
    recurse(0, 0);
    return count_;
  }

 private:
  void recurse(int idx, int joined) {
    const int n = graph_.n_vertices();
    if (joined == n - 1) {
      ++count_;
      if (budget_ >= 0 && count_ > budget_) {
        throw BudgetExceededError("basis enumeration exceeded its budget");
      }
      if (visit_) visit_(picked_);
      return;
    }
    const auto& edges = graph_.edges();
    if (idx >= static_cast<int>(edges.size())) return;
    const auto& e = edges[static_cast<size_t>(idx)];
    if (dsu_.find(e.u) == dsu_.find(e.v)) {
      recurse(idx + 1, joined);  // cycle edge, exclusion is forced
      return;
    }
    dsu_.unite(e.u, e.v);
    picked_.push_back(idx);
    recurse(idx + 1, joined + 1);
    picked_.pop_back();
    dsu_.rollback_last_union();
    if (connectable_without(idx)) recurse(idx + 1, joined);
  }

  // Whether edges after `idx` can still merge all current components.
  bool connectable_without(int idx) {
    const int n = graph_.n_vertices();
    scratch_.reset(n + 1);
    for (int v = 1; v <= n; ++v) scratch_.unite(v, dsu_.find(v));
    const auto& edges = graph_.edges();
    for (size_t i = static_cast<size_t>(idx) + 1; i < edges.size(); ++i) {
      scratch_.unite(edges[i].u, edges[i].v);
    }
    return scratch_.components() == 2;  // vertex 0 stays a sentinel
  }

  const GraphicMatroid& graph_;
  const BasisVisitor& visit_;
  long long budget_;
  RollbackDisjointSets dsu_;
  DisjointSets scratch_;
  std::vector<ElementId> picked_;
  long long count_ = 0;
};

}  // namespace detail

// Streams every spanning tree (edge-id lists) of the graph. Returns the
// number of trees; throws BudgetExceededError past `budget` (< 0: unlimited).
inline long long enumerate_spanning_trees(const GraphicMatroid& graph,
                                          const BasisVisitor& visit,
                                          long long budget = -1) {
  detail::SpanningTreeEnumerator enumerator(graph, visit, budget);
  return enumerator.run();
}

// Oracle-driven include/exclude enumeration of all bases of a minor, in
// lexicographic element order. Works for any matroid; intended for small
// ground sets and as the uniform-matroid path (where it emits all k-subsets).
inline long long enumerate_bases_generic(const MatroidMinor& minor,
                                         const BasisVisitor& visit,
                                         long long budget = -1) {
  const std::vector<ElementId> ground = minor.ground_elements();
  const int rank = minor.rank();
  long long count = 0;
  std::vector<ElementId> picked;
  picked.reserve(static_cast<size_t>(rank));

  auto recurse = [&](auto&& self, size_t idx) -> void {
    if (static_cast<int>(picked.size()) == rank) {
      ++count;
      if (budget >= 0 && count > budget) {
        throw BudgetExceededError("basis enumeration exceeded its budget");
      }
      if (visit) visit(picked);
      return;
    }
    const int missing = rank - static_cast<int>(picked.size());
    if (idx >= ground.size() ||
        static_cast<int>(ground.size() - idx) < missing) {
      return;
    }
    picked.push_back(ground[idx]);
    if (minor.is_independent(picked)) self(self, idx + 1);
    picked.pop_back();
    self(self, idx + 1);
  };
  recurse(recurse, 0);
  return count;
}

// Dispatch on the matroid kind: graphs use the spanning-tree recursion,
// everything else the generic oracle walk.
inline long long enumerate_bases(const Matroid& matroid, MatroidKind kind,
                                 const BasisVisitor& visit,
                                 long long budget = -1) {
  if (kind == MatroidKind::kGraphic) {
    return enumerate_spanning_trees(
        dynamic_cast<const GraphicMatroid&>(matroid), visit, budget);
  }
  return enumerate_bases_generic(MatroidMinor(matroid), visit, budget);
}

inline std::vector<Basis> collect_bases(const Matroid& matroid,
                                        MatroidKind kind,
                                        long long budget = -1) {
  std::vector<Basis> out;
  enumerate_bases(
      matroid, kind,
      [&out](std::span<const ElementId> elems) {
        out.emplace_back(std::vector<ElementId>(elems.begin(), elems.end()));
      },
      budget);
  return out;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_ENUMERATE_HPP
