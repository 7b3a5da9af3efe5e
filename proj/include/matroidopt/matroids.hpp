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

#ifndef MATROIDOPT_MATROIDS_HPP
#define MATROIDOPT_MATROIDS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroidopt/disjoint_sets.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

enum class MatroidKind { kGraphic, kUniform, kPartition };

// Cycle matroid of an undirected multigraph. Vertices are 1-based; parallel
// edges are allowed and self-loops form dependent singletons. Queries build a
// fresh union-find, so the oracle carries no mutable state.
class GraphicMatroid : public Matroid {
 public:
  struct Edge {
    int u = 0;
    int v = 0;
  };

  GraphicMatroid(int n_vertices, std::vector<Edge> edges)
      : n_vertices_(n_vertices), edges_(std::move(edges)) {
    if (n_vertices_ <= 0) throw InputError("graph needs at least one vertex");
    for (const Edge& e : edges_) {
      if (e.u < 1 || e.u > n_vertices_ || e.v < 1 || e.v > n_vertices_) {
        throw InputError("edge endpoint outside 1.." +
                         std::to_string(n_vertices_));
      }
    }
  }

  int ground_size() const override { return static_cast<int>(edges_.size()); }

  bool is_independent(std::span<const ElementId> subset) const override {
    thread_local DisjointSets dsu(0);
    dsu.reset(n_vertices_ + 1);
    for (ElementId id : subset) {
      const Edge& e = edge(id);
      if (!dsu.unite(e.u, e.v)) return false;
    }
    return true;
  }

  int n_vertices() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(ElementId id) const {
    if (id < 0 || id >= ground_size()) {
      throw InputError("edge id " + std::to_string(id) + " out of range");
    }
    return edges_[static_cast<size_t>(id)];
  }

  bool is_connected() const {
    DisjointSets dsu(n_vertices_ + 1);
    for (const Edge& e : edges_) dsu.unite(e.u, e.v);
    // Vertex 0 is a sentinel, hence one extra component.
    return dsu.components() == 2;
  }

 private:
  int n_vertices_;
  std::vector<Edge> edges_;
};

// Uniform matroid U_{k,n}: independent iff at most k elements.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int n, int k) : n_(n), k_(k) {
    if (n <= 0) throw InputError("uniform matroid needs n >= 1");
    if (k <= 0 || k > n) throw InputError("uniform matroid needs 0 < k <= n");
  }

  int ground_size() const override { return n_; }

  bool is_independent(std::span<const ElementId> subset) const override {
    for (ElementId e : subset) {
      if (e < 0 || e >= n_) {
        throw InputError("element id " + std::to_string(e) + " out of range");
      }
    }
    return static_cast<int>(subset.size()) <= k_;
  }

  int k() const { return k_; }

 private:
  int n_;
  int k_;
};

// Partition matroid: at most bound[i] elements from block i.
class PartitionMatroid : public Matroid {
 public:
  // block_of[e] is the block index of element e; bounds[i] >= 0.
  PartitionMatroid(std::vector<int> block_of, std::vector<int> bounds)
      : block_of_(std::move(block_of)), bounds_(std::move(bounds)) {
    if (block_of_.empty()) {
      throw InputError("partition matroid needs a non-empty ground set");
    }
    for (int blk : block_of_) {
      if (blk < 0 || blk >= static_cast<int>(bounds_.size())) {
        throw InputError("element assigned to an unknown block");
      }
    }
    for (int b : bounds_) {
      if (b < 0) throw InputError("negative block bound");
    }
  }

  int ground_size() const override {
    return static_cast<int>(block_of_.size());
  }

  bool is_independent(std::span<const ElementId> subset) const override {
    thread_local std::vector<int> counts;
    counts.assign(bounds_.size(), 0);
    for (ElementId e : subset) {
      if (e < 0 || e >= ground_size()) {
        throw InputError("element id " + std::to_string(e) + " out of range");
      }
      int blk = block_of_[static_cast<size_t>(e)];
      if (++counts[static_cast<size_t>(blk)] > bounds_[static_cast<size_t>(blk)]) {
        return false;
      }
    }
    return true;
  }

  std::size_t block_count() const { return bounds_.size(); }

  int block_bound(int block) const {
    return bounds_[static_cast<size_t>(block)];
  }

  int block_size(int block) const {
    int size = 0;
    for (int blk : block_of_) {
      if (blk == block) ++size;
    }
    return size;
  }

 private:
  std::vector<int> block_of_;
  std::vector<int> bounds_;
};

}  // namespace matroidopt

#endif  // MATROIDOPT_MATROIDS_HPP
