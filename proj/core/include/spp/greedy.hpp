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

#ifndef SPPSOLVE_GREEDY_HPP
#define SPPSOLVE_GREEDY_HPP

#include "spp/instance.hpp"

namespace spp {

// Density-greedy construction of an initial column set: repeatedly selects,
// among columns disjoint from everything selected so far, the one with the
// highest elements-per-cost ratio (ties broken by lowest id), until no
// disjoint column remains. Ratio comparisons use cross-multiplication, not
// division. The result is always pairwise disjoint but need not cover every
// element; callers check is_partition.
Selection greedy_initial(const SppInstance& instance);

}  // namespace spp

#endif  // SPPSOLVE_GREEDY_HPP
