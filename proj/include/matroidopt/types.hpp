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

#ifndef MATROIDOPT_TYPES_HPP
#define MATROIDOPT_TYPES_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace matroidopt {

// Ground-set elements are dense 0-based indices into the cost arrays.
using ElementId = int;

enum class Sense { kMin, kMax };

// Per-element bicriteria cost. `c` is a non-negative integer; `b` is the
// binary criterion (0 = green, 1 = red) except in the generalized knapsack
// setting where it ranges over {0, ..., beta}.
struct CostPair {
  long long c = 0;
  int b = 0;
};

// Aggregated objective value of a basis.
struct OutcomeVector {
  long long c = 0;
  int b = 0;

  friend bool operator==(const OutcomeVector&, const OutcomeVector&) = default;
  friend auto operator<=>(const OutcomeVector&, const OutcomeVector&) = default;
};

// y1 dominates y2 iff y1 is componentwise at least as good and differs.
inline bool dominates(const OutcomeVector& y1, const OutcomeVector& y2,
                      Sense sense) {
  if (y1 == y2) return false;
  if (sense == Sense::kMin) return y1.c <= y2.c && y1.b <= y2.b;
  return y1.c >= y2.c && y1.b >= y2.b;
}

/// Strong dominance: strictly better in every component.
inline bool strongly_dominates(const OutcomeVector& y1, const OutcomeVector& y2,
                               Sense sense) {
  if (sense == Sense::kMin) return y1.c < y2.c && y1.b < y2.b;
  return y1.c > y2.c && y1.b > y2.b;
}

// Input that violates a documented precondition (bad ids, malformed values).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance file.
class ParseError : public InputError {
 public:
  explicit ParseError(const std::string& what) : InputError(what) {}
};

// Structurally valid instance that admits no basis (e.g. disconnected graph).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Distinct rejection for degenerate matroids: empty ground set or rank 0.
class RankZeroError : public InfeasibleError {
 public:
  explicit RankZeroError(const std::string& what) : InfeasibleError(what) {}
};

// Request that cannot be served by the chosen algorithm (kind mismatch, ...).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration abandoned because the basis count exceeds the configured budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

// A basis kept as a sorted, duplicate-free element list. Sortedness is the
// canonical form every set operation below relies on.
class Basis {
 public:
  Basis() = default;

  explicit Basis(std::vector<ElementId> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
      throw InputError("basis contains a duplicate element");
    }
  }

  const std::vector<ElementId>& elements() const { return elems_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }

  bool contains(ElementId e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
  }

  // Replaces `out` by `in`; both must change membership.
  Basis with_swap(ElementId out, ElementId in) const {
    if (!contains(out) || contains(in)) {
      throw InputError("swap endpoints do not match basis membership");
    }
    std::vector<ElementId> next;
    next.reserve(elems_.size());
    for (ElementId e : elems_) {
      if (e != out) next.push_back(e);
    }
    next.insert(std::upper_bound(next.begin(), next.end(), in), in);
    Basis result;
    result.elems_ = std::move(next);
    return result;
  }

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;

 private:
  std::vector<ElementId> elems_;
};

// Sorted-set helpers used throughout for element id lists.
inline std::vector<ElementId> sorted_difference(
    std::span<const ElementId> a, std::span<const ElementId> b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline std::vector<ElementId> sorted_intersection(
    std::span<const ElementId> a, std::span<const ElementId> b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline std::vector<ElementId> sorted_union(std::span<const ElementId> a,
                                           std::span<const ElementId> b) {
  std::vector<ElementId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

inline long long intersection_size(std::span<const ElementId> a,
                                   std::span<const ElementId> b) {
  long long count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_TYPES_HPP
