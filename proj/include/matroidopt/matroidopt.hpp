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

#ifndef MATROIDOPT_MATROIDOPT_HPP
#define MATROIDOPT_MATROIDOPT_HPP

#include "matroidopt/ce.hpp"
#include "matroidopt/disjoint_sets.hpp"
#include "matroidopt/enumerate.hpp"
#include "matroidopt/esa.hpp"
#include "matroidopt/experiments.hpp"
#include "matroidopt/generators.hpp"
#include "matroidopt/greedy.hpp"
#include "matroidopt/instance.hpp"
#include "matroidopt/io.hpp"
#include "matroidopt/knapsack_dp.hpp"
#include "matroidopt/matroid.hpp"
#include "matroidopt/matroids.hpp"
#include "matroidopt/naive_swap.hpp"
#include "matroidopt/pareto.hpp"
#include "matroidopt/rng.hpp"
#include "matroidopt/tree_count.hpp"
#include "matroidopt/types.hpp"

#endif  // MATROIDOPT_MATROIDOPT_HPP
