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

#ifndef MATROIDOPT_INSTANCE_HPP
#define MATROIDOPT_INSTANCE_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "matroidopt/matroid.hpp"
#include "matroidopt/matroids.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

inline std::string to_string(Sense s) {
  return s == Sense::kMin ? "min" : "max";
}

// The swap pipeline always minimizes. A maximization instance is mapped to an
// equivalent minimization problem at load time (c' = c_max - c, b' = 1 - b for
// binary b) and outcomes are mapped back through this view.
//
// `green_rank` fixes the global equal-cost ordering used by every tie rule:
// elements with b = 0 in the minimization space, ranked by c ascending then
// id ascending, numbered 0..|E_0|-1.
struct MinimizedProblem {
  const Matroid* matroid = nullptr;
  std::vector<CostPair> cost;  // minimization-space costs, b in {0,1}
  int rank = 0;
  Sense original_sense = Sense::kMin;
  long long transform_c_max = 0;  // only meaningful for original max sense

  std::vector<ElementId> greens;   // b = 0, ascending id
  std::vector<ElementId> reds;     // b = 1, ascending id
  std::vector<int> green_rank;     // per element; -1 for red elements

  long long c(ElementId e) const { return cost[static_cast<size_t>(e)].c; }
  int b(ElementId e) const { return cost[static_cast<size_t>(e)].b; }
  bool green(ElementId e) const { return b(e) == 0; }

  OutcomeVector outcome_of(std::span<const ElementId> elems) const {
    OutcomeVector y;
    for (ElementId e : elems) {
      y.c += c(e);
      y.b += b(e);
    }
    return y;
  }

  // Maps a minimization-space outcome back to the instance's own sense.
  OutcomeVector to_original(OutcomeVector y) const {
    if (original_sense == Sense::kMin) return y;
    return OutcomeVector{rank * transform_c_max - y.c, rank - y.b};
  }
};

// A biobjective matroid instance: minimize or maximize (c(B), b(B)) over the
// bases B of the matroid. Validated on construction; rejects degenerate
// matroids (empty ground set / rank 0) with a distinct error and graphs
// without a spanning tree as infeasible.
class BicriteriaInstance {
 public:
  BicriteriaInstance(std::shared_ptr<const Matroid> matroid,
                     std::vector<CostPair> costs, Sense sense,
                     MatroidKind kind, int beta = 1)
      : matroid_(std::move(matroid)),
        costs_(std::move(costs)),
        sense_(sense),
        kind_(kind),
        beta_(beta) {
    if (!matroid_) throw InputError("instance without a matroid");
    if (matroid_->ground_size() == 0) {
      throw RankZeroError("instance rejected: empty ground set");
    }
    if (static_cast<int>(costs_.size()) != matroid_->ground_size()) {
      throw InputError("cost vector length disagrees with the ground set");
    }
    if (beta_ < 1) throw InputError("beta must be at least 1");
    for (const CostPair& cp : costs_) {
      if (cp.c < 0) throw InputError("negative c cost");
      if (cp.b < 0 || cp.b > beta_) {
        throw InputError("b value outside 0.." + std::to_string(beta_));
      }
    }
    if (kind_ == MatroidKind::kGraphic) {
      const auto& g = dynamic_cast<const GraphicMatroid&>(*matroid_);
      if (!g.is_connected()) {
        throw InfeasibleError(
            "instance rejected: graph has no spanning tree (disconnected)");
      }
      rank_ = g.n_vertices() - 1;
    } else if (kind_ == MatroidKind::kUniform) {
      rank_ = dynamic_cast<const UniformMatroid&>(*matroid_).k();
    } else {
      rank_ = MatroidMinor(*matroid_).rank();
    }
    if (rank_ == 0) {
      throw RankZeroError("instance rejected: matroid has rank 0");
    }
  }

  const Matroid& matroid() const { return *matroid_; }
  std::shared_ptr<const Matroid> matroid_ptr() const { return matroid_; }
  const std::vector<CostPair>& costs() const { return costs_; }
  Sense sense() const { return sense_; }
  MatroidKind kind() const { return kind_; }
  int beta() const { return beta_; }
  int rank() const { return rank_; }
  int ground_size() const { return matroid_->ground_size(); }

  bool binary() const { return beta_ == 1; }

  OutcomeVector outcome_of(std::span<const ElementId> elems) const {
    OutcomeVector y;
    for (ElementId e : elems) {
      y.c += costs_[static_cast<size_t>(e)].c;
      y.b += costs_[static_cast<size_t>(e)].b;
    }
    return y;
  }

  // Canonical minimization view. Requires a binary b criterion.
  MinimizedProblem minimized() const {
    if (!binary()) {
      throw UsageError(
          "the swap pipeline needs a binary b criterion (beta = 1)");
    }
    MinimizedProblem p;
    p.matroid = matroid_.get();
    p.rank = rank_;
    p.original_sense = sense_;
    p.cost = costs_;
    if (sense_ == Sense::kMax) {
      long long c_max = 0;
      for (const CostPair& cp : costs_) c_max = std::max(c_max, cp.c);
      p.transform_c_max = c_max;
      for (CostPair& cp : p.cost) {
        cp.c = c_max - cp.c;
        cp.b = 1 - cp.b;
      }
    }
    const int n = ground_size();
    p.green_rank.assign(static_cast<size_t>(n), -1);
    for (ElementId e = 0; e < n; ++e) {
      (p.cost[static_cast<size_t>(e)].b == 0 ? p.greens : p.reds).push_back(e);
    }
    std::vector<ElementId> order = p.greens;
    std::stable_sort(order.begin(), order.end(),
                     [&p](ElementId a, ElementId b) {
                       return p.cost[static_cast<size_t>(a)].c <
                              p.cost[static_cast<size_t>(b)].c;
                     });
    for (size_t i = 0; i < order.size(); ++i) {
      p.green_rank[static_cast<size_t>(order[i])] = static_cast<int>(i);
    }
    return p;
  }

 private:
  std::shared_ptr<const Matroid> matroid_;
  std::vector<CostPair> costs_;
  Sense sense_;
  MatroidKind kind_;
  int beta_;
  int rank_ = 0;
};

}  // namespace matroidopt

#endif  // MATROIDOPT_INSTANCE_HPP
