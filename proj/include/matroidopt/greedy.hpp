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

#ifndef MATROIDOPT_GREEDY_HPP
#define MATROIDOPT_GREEDY_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "matroidopt/instance.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/types.hpp"

namespace matroidopt {

// Greedily extends the empty set along `ordered` and returns the accepted
// elements. When `ordered` spans the minor this is a basis; in general it is
// a maximum independent subset of `ordered`.
inline Basis greedy_scan(const MatroidMinor& minor,
                         std::span<const ElementId> ordered) {
  std::vector<ElementId> accepted;
  for (ElementId e : ordered) {
    accepted.push_back(e);
    if (!minor.is_independent(accepted)) accepted.pop_back();
  }
  return Basis(std::move(accepted));
}

// Minimum-weight basis under a strict weak order on elements. Equal keys are
// resolved by ascending ElementId, which makes the result unique.
template <typename Less>
Basis min_weight_basis(const MatroidMinor& minor, Less&& less) {
  std::vector<ElementId> order = minor.ground_elements();  // ascending id
  std::stable_sort(order.begin(), order.end(), less);
  return greedy_scan(minor, order);
}

namespace detail {

// Whether (rank+1)*c + b can be scalarized without overflow.
inline bool scalar_weights_fit(const MinimizedProblem& p) {
  long long c_max = 0;
  for (const CostPair& cp : p.cost) c_max = std::max(c_max, cp.c);
  const long long factor = static_cast<long long>(p.rank) + 1;
  return c_max <= (std::numeric_limits<long long>::max() - factor) / factor;
}

}  // namespace detail

// Lexicographically (c, b)-optimal basis: minimum c, and minimum b among all
// c-optimal bases. Uses the scalarization w(e) = (rank+1)*c(e) + b(e) when it
// fits in 64 bits and the equivalent componentwise order otherwise.
inline Basis lex_basis_cb(const MinimizedProblem& p) {
  MatroidMinor view(*p.matroid);
  if (detail::scalar_weights_fit(p)) {
    const long long factor = static_cast<long long>(p.rank) + 1;
    return min_weight_basis(view, [&p, factor](ElementId a, ElementId b) {
      return factor * p.c(a) + p.b(a) < factor * p.c(b) + p.b(b);
    });
  }
  return min_weight_basis(view, [&p](ElementId a, ElementId b) {
    if (p.c(a) != p.c(b)) return p.c(a) < p.c(b);
    return p.b(a) < p.b(b);
  });
}

// B_j together with the aligned extreme basis B_u and their difference sets.
struct BasisPair {
  Basis b_j;  // lex (c, b)-optimal
  Basis b_u;  // lex (b, c)-optimal sharing the maximum of elements with b_j
  std::vector<ElementId> common;     // b_j intersect b_u
  std::vector<ElementId> reds_out;   // b_j minus b_u, all red
  std::vector<ElementId> greens_in;  // b_u minus b_j, all green
};

// Lexicographically (b, c)-optimal basis aligned with b_j: among all bases
// with minimum b (then minimum c) it shares the maximum number of elements
// with b_j, which is equivalent to
//   (a) every green element of b_j lies in b_u, and
//   (b) every red element of b_u lies in b_j.
// A greedy pass that prefers b_j members on ties gets close; the remainder is
// repaired by strong exchanges, each of which provably swaps along an
// equal-cost pair and grows the intersection by one.
inline Basis lex_basis_bc_repaired(const MinimizedProblem& p,
                                   const Basis& b_j) {
  MatroidMinor view(*p.matroid);
  Basis b_u = min_weight_basis(view, [&p, &b_j](ElementId x, ElementId y) {
    const bool in_x = b_j.contains(x);
    const bool in_y = b_j.contains(y);
    if (p.b(x) != p.b(y)) return p.b(x) < p.b(y);
    if (p.c(x) != p.c(y)) return p.c(x) < p.c(y);
    if (in_x != in_y) return in_x;
    return false;  // stable sort keeps ascending id
  });

  const int guard = p.rank + 1;
  for (int step = 0; step <= guard; ++step) {
    // (a) a green element of b_j missing from b_u?
    ElementId missing_green = -1;
    for (ElementId g : b_j.elements()) {
      if (p.green(g) && !b_u.contains(g)) {
        missing_green = g;
        break;
      }
    }
    if (missing_green >= 0) {
      const ElementId g = missing_green;
      ElementId partner = -1;
      for (ElementId f : view.fundamental_circuit(b_u, g)) {
        if (f == g || b_j.contains(f)) continue;
        // b_u - f + g is a basis since f lies on g's circuit; the exchange
        // must also keep b_j - g + f a basis so both optima are preserved.
        if (view.is_independent(b_j.with_swap(g, f))) {
          partner = f;
          break;
        }
      }
      if (partner < 0 || !p.green(partner) || p.c(partner) != p.c(g)) {
        throw std::logic_error("basis alignment lost the exchange partner");
      }
      b_u = b_u.with_swap(partner, g);
      continue;
    }

    // (b) a red element of b_u missing from b_j?
    ElementId stray_red = -1;
    for (ElementId r : b_u.elements()) {
      if (!p.green(r) && !b_j.contains(r)) {
        stray_red = r;
        break;
      }
    }
    if (stray_red >= 0) {
      const ElementId r = stray_red;
      ElementId partner = -1;
      for (ElementId f : view.fundamental_circuit(b_j, r)) {
        if (f == r || b_u.contains(f)) continue;
        if (view.is_independent(b_u.with_swap(r, f))) {
          partner = f;
          break;
        }
      }
      if (partner < 0 || p.green(partner) || p.c(partner) != p.c(r)) {
        throw std::logic_error("basis alignment lost the exchange partner");
      }
      b_u = b_u.with_swap(r, partner);
      continue;
    }
    return b_u;
  }
  throw std::logic_error("basis alignment failed to terminate");
}

// Computes (B_j, B_u) and their set decomposition, enforcing the alignment
// properties at runtime.
inline BasisPair compute_basis_pair(const MinimizedProblem& p) {
  BasisPair pair;
  pair.b_j = lex_basis_cb(p);
  pair.b_u = lex_basis_bc_repaired(p, pair.b_j);
  pair.common = sorted_intersection(pair.b_j.elements(), pair.b_u.elements());
  pair.reds_out = sorted_difference(pair.b_j.elements(), pair.b_u.elements());
  pair.greens_in = sorted_difference(pair.b_u.elements(), pair.b_j.elements());
  for (ElementId e : pair.reds_out) {
    if (p.green(e)) {
      throw std::logic_error("green element of b_j escaped b_u");
    }
  }
  for (ElementId e : pair.greens_in) {
    if (!p.green(e)) {
      throw std::logic_error("red element of b_u escaped b_j");
    }
  }
  if (pair.reds_out.size() != pair.greens_in.size()) {
    throw std::logic_error("basis pair difference sets disagree in size");
  }
  return pair;
}

}  // namespace matroidopt

#endif  // MATROIDOPT_GREEDY_HPP
