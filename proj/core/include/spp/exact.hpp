// Copyright 2026 The sppsolve Authors
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

#ifndef SPPSOLVE_EXACT_HPP
#define SPPSOLVE_EXACT_HPP

#include <cstdint>
#include <limits>
#include <span>

#include "spp/instance.hpp"

namespace spp {

struct BnbLimits {
  std::int64_t max_nodes = 5'000'000;
  double max_seconds = 0.0;  // 0 means unlimited
};

struct ExactResult {
  enum class Status { Optimal, Infeasible };

  Status status = Status::Infeasible;
  Selection selection;  // meaningful only when Optimal
  std::int64_t nodes_explored = 0;
  // Objective of the LP relaxation at the root node; NaN when the root
  // relaxation is infeasible.
  double root_relaxation = std::numeric_limits<double>::quiet_NaN();
};

// Minimum-cost partition using only the allowed column ids, found by
// depth-first branch and bound with LP relaxation bounds. Branches on the
// most fractional variable, explores the include branch first, and uses
// fixed ordering rules so repeated runs visit identical node counts.
// Throws Error(ResourceLimit) when a node or time cap is exceeded.
ExactResult solve_exact(const SppInstance& instance,
                        std::span<const int> allowed,
                        const BnbLimits& limits = {});

// Convenience overload with allowed = all columns.
ExactResult solve_exact(const SppInstance& instance,
                        const BnbLimits& limits = {});

// Exhaustive oracle: explores every selection of columns (pruned only by
// provably violated disjointness) and returns the minimum-cost partition.
// Independent of the LP machinery. Guarded to pools of at most 25 columns;
// larger pools throw Error(TooLarge).
ExactResult brute_force(const SppInstance& instance);

}  // namespace spp

#endif  // SPPSOLVE_EXACT_HPP
