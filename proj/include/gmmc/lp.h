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

#ifndef GMMC_LP_H_
#define GMMC_LP_H_

#include <limits>
#include <string>
#include <vector>

namespace gmmc::lp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Sense { kMinimize, kMaximize };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct Constraint {
  std::vector<double> coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Dense linear program. Variables default to [0, +inf).
class LinearProgram {
 public:
  explicit LinearProgram(int num_variables, Sense sense = Sense::kMinimize);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  Sense sense() const { return sense_; }

  void set_objective(std::vector<double> coefficients);
  void set_objective_coefficient(int var, double c);
  const std::vector<double>& objective() const { return objective_; }

  void set_bounds(int var, double lower, double upper);
  void set_free(int var) { set_bounds(var, -kInfinity, kInfinity); }
  double lower_bound(int var) const { return lower_[var]; }
  double upper_bound(int var) const { return upper_[var]; }

  // Returns the row index. Throws StructuralError on a length mismatch.
  int AddConstraint(std::vector<double> coefficients, Relation relation,
                    double rhs);
  const Constraint& constraint(int row) const { return constraints_[row]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void set_variable_name(int var, std::string name);
  const std::string& variable_name(int var) const { return names_[var]; }

  // Throws StructuralError when sizes, bounds or entries are malformed.
  void Validate() const;

 private:
  Sense sense_;
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

std::string ToString(Status status);

struct SolveResult {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> primal;
  // One multiplier per constraint: the sensitivity of the optimal objective
  // to that constraint's right-hand side. Filled only when optimal.
  std::vector<double> duals;
  // Objective of the dual program at `duals` (including the variable-bound
  // terms). Equal to `objective` at optimality up to rounding.
  double dual_objective = 0.0;
  int iterations = 0;
};

enum class Route {
  kAuto,    // solve whichever of primal / dual has fewer rows
  kPrimal,  // always pivot on the primal tableau
  kDual,    // always pivot on the dual tableau
};

struct SolveOptions {
  double feasibility_tolerance = 1e-8;
  double optimality_tolerance = 1e-9;
  Route route = Route::kAuto;
};

// Dense two-phase simplex. Dantzig pricing, switching to Bland's rule after
// 10 * (columns + rows) consecutive degenerate pivots. Deterministic.
SolveResult Solve(const LinearProgram& lp, const SolveOptions& options = {});

// Largest violation of a constraint or bound by `x` (0 when feasible).
double MaxViolation(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace gmmc::lp

#endif  // GMMC_LP_H_
