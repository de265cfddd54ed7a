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

#ifndef SPPSOLVE_INSTANCE_HPP
#define SPPSOLVE_INSTANCE_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spp/error.hpp"

namespace spp {

// Absolute tolerance for equality comparisons in solver logic.
inline constexpr double kEps = 1e-9;
// Absolute tolerance for constraint feasibility checks.
inline constexpr double kFeasTol = 1e-7;

// One selectable subset: the elements it covers and the cost of selecting it.
// Element indices are 0-based internally and sorted ascending. The text file
// format is 1-based; conversion happens only at the I/O boundary.
struct Column {
  int id = 0;
  std::vector<int> rows;
  double cost = 0.0;
};

// A set partitioning instance: a universe of `num_elements` elements and an
// ordered pool of columns. Column ids equal their position in the pool.
// Instances are immutable after construction; every operation on them is a
// pure function, so concurrent reads are safe.
struct SppInstance {
  int num_elements = 0;
  std::vector<Column> columns;

  int num_columns() const noexcept { return static_cast<int>(columns.size()); }
};

// A candidate solution: chosen column ids (sorted ascending) plus the exact
// sum of their costs.
struct Selection {
  std::vector<int> chosen;
  double objective = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* lp_status_name(LpStatus status) noexcept;

// Dual values attached to the element constraints of a restricted master
// problem, as produced by solve_dual_rmp. `objective` is the sum of the
// values and is meaningful only when status is Optimal.
struct DualSolution {
  std::vector<double> values;
  double objective = 0.0;
  LpStatus status = LpStatus::Optimal;
};

// Builds a column with canonical row order (sorted, duplicates removed).
Column make_column(int id, std::vector<int> rows, double cost);

// Builds an instance from (rows, cost) pairs, assigning ids by position.
SppInstance make_instance(int num_elements,
                          std::vector<std::pair<std::vector<int>, double>> cols);

// Builds a Selection over `instance` with the canonical objective (costs
// summed in ascending id order). Throws UnknownColumnId.
Selection make_selection(const SppInstance& instance, std::vector<int> ids);

struct Validation {
  bool ok = true;
  Errc code = Errc::EmptyColumn;  // meaningful only when !ok
  std::string message;
};

// Checks every instance invariant: nonempty row sets, strictly positive
// costs, row indices within range, ids equal to positions, canonical row
// order. Returns the first violation found.
Validation validate_instance(const SppInstance& instance);

// Throws Error if validate_instance reports a violation.
void require_valid(const SppInstance& instance);

// True iff the chosen columns are pairwise disjoint and cover every element.
bool is_partition(const SppInstance& instance, const Selection& selection);

// Exact sum of the chosen columns' costs, accumulated in ascending id order.
double objective(const SppInstance& instance, const Selection& selection);

// c_j minus the dual weight of the rows the column covers.
double reduced_cost(const Column& column, const DualSolution& duals);

// Divides every cost by scale = max_j c_j so costs lie in (0, 1]. When the
// maximum is already <= 1 the instance is returned unchanged with scale 1.
// Multiplying a scaled objective by `scale` recovers the original value.
std::pair<SppInstance, double> normalize_costs(const SppInstance& instance);

// Text serialization. Header line "M N", then one line per column:
// "cost k i_1 ... i_k" with 1-based ascending element indices. Costs are
// written with up to nine fractional digits, which round-trips every value
// the generators produce.
void write_instance(std::ostream& out, const SppInstance& instance);
SppInstance read_instance(std::istream& in);

void write_instance_file(const std::filesystem::path& path,
                         const SppInstance& instance);
SppInstance read_instance_file(const std::filesystem::path& path);

// Decimal cost formatting used by the instance writer and the reports.
std::string format_cost(double value);

}  // namespace spp

#endif  // SPPSOLVE_INSTANCE_HPP
