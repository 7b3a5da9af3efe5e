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

#ifndef MATROIDOPT_MATROID_HPP
#define MATROIDOPT_MATROID_HPP

#include <atomic>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matroidopt/types.hpp"

namespace matroidopt {

// Independence oracle over a dense 0-based ground set. Implementations must
// be stateless with respect to queries so concurrent calls are safe.
class Matroid {
 public:
  virtual ~Matroid() = default;

  virtual int ground_size() const = 0;

  // `subset` holds distinct element ids. Order is irrelevant.
  virtual bool is_independent(std::span<const ElementId> subset) const = 0;
};

// Immutable minor view (base - deleted) / contracted. All algorithms in this
// library reach matroid structure exclusively through this class, so they
// work unchanged on every Matroid implementation.
//
// `deleted` and `contracted` are disjoint element sets of the base matroid;
// `contracted` must be independent in the base matroid after the deletions.
// A subset S of the view's ground set is independent iff S cup contracted is
// independent in the base matroid.
class MatroidMinor {
 public:
  explicit MatroidMinor(const Matroid& base) : base_(&base) {}

  MatroidMinor(const Matroid& base, std::vector<ElementId> deleted,
               std::vector<ElementId> contracted)
      : base_(&base),
        deleted_(std::move(deleted)),
        contracted_(std::move(contracted)) {
    normalize(deleted_);
    normalize(contracted_);
    if (!sorted_intersection(deleted_, contracted_).empty()) {
      throw InputError("deleted and contracted sets overlap");
    }
    if (!base_->is_independent(contracted_)) {
      throw InputError("contracted set is dependent in the base matroid");
    }
  }

  MatroidMinor(const MatroidMinor& other)
      : base_(other.base_),
        deleted_(other.deleted_),
        contracted_(other.contracted_),
        rank_cache_(other.rank_cache_.load(std::memory_order_relaxed)) {}

  MatroidMinor(MatroidMinor&& other) noexcept
      : base_(other.base_),
        deleted_(std::move(other.deleted_)),
        contracted_(std::move(other.contracted_)),
        rank_cache_(other.rank_cache_.load(std::memory_order_relaxed)) {}

  MatroidMinor& operator=(const MatroidMinor&) = delete;
  MatroidMinor& operator=(MatroidMinor&&) = delete;

  const Matroid& base() const { return *base_; }
  const std::vector<ElementId>& deleted() const { return deleted_; }
  const std::vector<ElementId>& contracted() const { return contracted_; }

  int base_ground_size() const { return base_->ground_size(); }

  int ground_size() const {
    return base_ground_size() - static_cast<int>(deleted_.size()) -
           static_cast<int>(contracted_.size());
  }

  bool in_ground(ElementId e) const {
    check_range(e);
    return !std::binary_search(deleted_.begin(), deleted_.end(), e) &&
           !std::binary_search(contracted_.begin(), contracted_.end(), e);
  }

  std::vector<ElementId> ground_elements() const {
    std::vector<ElementId> out;
    out.reserve(ground_size());
    for (ElementId e = 0; e < base_ground_size(); ++e) {
      if (in_ground(e)) out.push_back(e);
    }
    return out;
  }

  // True iff subset cup contracted is independent in the base matroid and
  // subset avoids the deleted elements.
  bool is_independent(std::span<const ElementId> subset) const {
    for (ElementId e : subset) {
      check_range(e);
      if (std::binary_search(deleted_.begin(), deleted_.end(), e)) {
        return false;
      }
    }
    std::vector<ElementId> query;
    query.reserve(subset.size() + contracted_.size());
    query.assign(subset.begin(), subset.end());
    query.insert(query.end(), contracted_.begin(), contracted_.end());
    return base_->is_independent(query);
  }

  bool is_independent(const Basis& basis) const {
    return is_independent(std::span<const ElementId>(basis.elements()));
  }

  // Rank via greedy extension in element order. Computed once; safe under
  // concurrent calls because re-computation is idempotent.
  int rank() const {
    int cached = rank_cache_.load(std::memory_order_acquire);
    if (cached >= 0) return cached;
    std::vector<ElementId> accepted;
    for (ElementId e = 0; e < base_ground_size(); ++e) {
      if (!in_ground(e)) continue;
      accepted.push_back(e);
      if (!is_independent(accepted)) accepted.pop_back();
    }
    int computed = static_cast<int>(accepted.size());
    rank_cache_.store(computed, std::memory_order_release);
    return computed;
  }

  bool is_basis(const Basis& basis) const {
    return basis.size() == rank() && is_independent(basis);
  }

  // New view with `elems` additionally deleted.
  MatroidMinor minus(std::span<const ElementId> elems) const {
    MatroidMinor next(*this);
    for (ElementId e : elems) {
      check_range(e);
      if (!in_ground(e)) {
        throw InputError("deleting element outside the minor's ground set");
      }
    }
    merge_into(next.deleted_, elems);
    next.rank_cache_.store(-1, std::memory_order_relaxed);
    return next;
  }

  // New view with the independent set `elems` additionally contracted.
  MatroidMinor contract(std::span<const ElementId> elems) const {
    for (ElementId e : elems) {
      check_range(e);
      if (!in_ground(e)) {
        throw InputError("contracting element outside the minor's ground set");
      }
    }
    if (!is_independent(elems)) {
      throw InputError("contracting a dependent set");
    }
    MatroidMinor next(*this);
    merge_into(next.contracted_, elems);
    next.rank_cache_.store(-1, std::memory_order_relaxed);
    return next;
  }

  // Unique circuit of basis cup {e}: e itself plus every basis element whose
  // removal restores independence after adding e.
  std::vector<ElementId> fundamental_circuit(const Basis& basis,
                                             ElementId e) const {
    check_range(e);
    if (basis.contains(e)) {
      throw InputError("fundamental circuit requested for a basis element");
    }
    if (!is_basis(basis)) {
      throw InputError("fundamental circuit requested against a non-basis");
    }
    std::vector<ElementId> circuit;
    circuit.push_back(e);
    std::vector<ElementId> probe;
    probe.reserve(basis.size());
    for (ElementId out : basis.elements()) {
      probe.clear();
      for (ElementId x : basis.elements()) {
        if (x != out) probe.push_back(x);
      }
      probe.push_back(e);
      if (is_independent(probe)) circuit.push_back(out);
    }
    std::sort(circuit.begin(), circuit.end());
    return circuit;
  }

 private:
  void check_range(ElementId e) const {
    if (e < 0 || e >= base_ground_size()) {
      throw InputError("element id " + std::to_string(e) + " out of range");
    }
  }

  static void normalize(std::vector<ElementId>& v) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw InputError("duplicate element in minor description");
    }
  }

  static void merge_into(std::vector<ElementId>& dst,
                         std::span<const ElementId> add) {
    std::vector<ElementId> extra(add.begin(), add.end());
    std::sort(extra.begin(), extra.end());
    if (std::adjacent_find(extra.begin(), extra.end()) != extra.end()) {
      throw InputError("duplicate element in minor description");
    }
    dst = sorted_union(dst, extra);
  }

  const Matroid* base_;
  std::vector<ElementId> deleted_;
  std::vector<ElementId> contracted_;
  mutable std::atomic<int> rank_cache_{-1};
};

}  // namespace matroidopt

#endif  // MATROIDOPT_MATROID_HPP
