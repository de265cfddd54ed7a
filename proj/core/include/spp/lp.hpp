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

#ifndef SPPSOLVE_LP_HPP
#define SPPSOLVE_LP_HPP

#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "spp/instance.hpp"

namespace spp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

// A general linear program over n variables with per-variable bounds and
// sparse constraint rows. Rows are stored sparse so that master problems
// with very large column pools assemble in O(nonzeros).
struct LinearProgram {
  enum class Direction { Maximize, Minimize };

  struct Row {
    std::vector<std::pair<int, double>> terms;  // (variable, coefficient)
    Relation rel = Relation::LessEqual;
    double rhs = 0.0;
  };

  Direction direction = Direction::Maximize;
  std::vector<double> objective;
  std::vector<double> lower;  // -kInf allowed
  std::vector<double> upper;  // +kInf allowed
  std::vector<Row> rows;

  int num_vars() const noexcept { return static_cast<int>(objective.size()); }

  static LinearProgram make(Direction dir, int num_vars) {
    LinearProgram lp;
    lp.direction = dir;
    lp.objective.assign(num_vars, 0.0);
    lp.lower.assign(num_vars, -kInf);
    lp.upper.assign(num_vars, kInf);
    return lp;
  }

  void add_row(std::vector<std::pair<int, double>> terms, Relation rel,
               double rhs) {
    rows.push_back(Row{std::move(terms), rel, rhs});
  }

  void set_bounds(int var, double lo, double up) {
    lower[var] = lo;
    upper[var] = up;
  }
};

// Result of solving a LinearProgram. When status is Optimal, `values` holds
// an optimizer, every constraint is satisfied within 1e-7, every bound
// within 1e-9, and `objective` is the dot product of values with the
// objective coefficients. When status is Unbounded, `ray` holds an improving
// feasible direction over the structural variables.
struct LpOutcome {
  LpStatus status = LpStatus::Optimal;
  double objective = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> values;
  std::vector<double> ray;
  std::int64_t pivots = 0;
};

struct SimplexOptions {
  double feas_tol = 1e-7;
  double opt_tol = 1e-9;
  // Consecutive degenerate pivots tolerated before switching the pricing
  // rule to Bland's rule.
  int degenerate_pivot_limit = 64;
  // 0 means choose automatically from the problem size.
  std::int64_t max_pivots = 0;
  int refactor_interval = 100;
};

// Bounded-variable two-phase simplex. Throws Error(NumericalFailure) when
// the basis cannot be kept numerically sound or the pivot budget is spent.
LpOutcome solve(const LinearProgram& lp, const SimplexOptions& options = {});

// Solves the dual of the restricted master problem over working column set
// K: maximize sum(y) subject to, for each j in K, sum of y over rows(j)
// <= c_j, with y free (bounded=false) or y in [0,1]^M (bounded=true).
// Unbounded can be reported only for bounded=false and means the primal
// restricted problem is infeasible. Large working sets are handled by lazy
// row activation; the returned duals satisfy every working constraint.
DualSolution solve_dual_rmp(const SppInstance& instance,
                            std::span<const int> working, bool bounded,
                            const SimplexOptions& options = {});

// Debug dump in LP text format, for cross-checking against external tools.
void write_lp(std::ostream& out, const LinearProgram& lp);

}  // namespace spp

#endif  // SPPSOLVE_LP_HPP
