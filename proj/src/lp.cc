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

#include "gmmc/lp.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include <Eigen/Dense>

#include "gmmc/error.h"

namespace gmmc::lp {

LinearProgram::LinearProgram(int num_variables, Sense sense)
    : sense_(sense),
      objective_(num_variables, 0.0),
      lower_(num_variables, 0.0),
      upper_(num_variables, kInfinity),
      names_(num_variables) {
  if (num_variables < 1) {
    throw StructuralError("a linear program needs at least one variable");
  }
}

void LinearProgram::set_objective(std::vector<double> coefficients) {
  if (coefficients.size() != objective_.size()) {
    throw StructuralError("objective length differs from variable count");
  }
  objective_ = std::move(coefficients);
}

void LinearProgram::set_objective_coefficient(int var, double c) {
  objective_.at(var) = c;
}

void LinearProgram::set_bounds(int var, double lower, double upper) {
  lower_.at(var) = lower;
  upper_.at(var) = upper;
}

int LinearProgram::AddConstraint(std::vector<double> coefficients,
                                 Relation relation, double rhs) {
  if (static_cast<int>(coefficients.size()) != num_variables()) {
    throw StructuralError("constraint length differs from variable count");
  }
  constraints_.push_back(Constraint{std::move(coefficients), relation, rhs});
  return num_constraints() - 1;
}

void LinearProgram::set_variable_name(int var, std::string name) {
  names_.at(var) = std::move(name);
}

void LinearProgram::Validate() const {
  const int n = num_variables();
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(objective_[j])) {
      throw StructuralError("objective coefficient is not finite");
    }
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) ||
        lower_[j] > upper_[j] || lower_[j] == kInfinity ||
        upper_[j] == -kInfinity) {
      throw StructuralError("malformed bounds on variable " +
                            std::to_string(j));
    }
  }
  for (const Constraint& row : constraints_) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw StructuralError("constraint length differs from variable count");
    }
    if (!std::isfinite(row.rhs) ||
        !std::all_of(row.coefficients.begin(), row.coefficients.end(),
                     [](double v) { return std::isfinite(v); })) {
      throw StructuralError("constraint entries must be finite");
    }
  }
}

std::string ToString(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

constexpr double kPivotTolerance = 1e-9;

// min c^T x  s.t.  a x = b, x >= 0.
struct StandardForm {
  Matrix a;
  Vector b;
  Vector c;
};

struct StandardSolution {
  Status status = Status::kInfeasible;
  Vector x;
  Vector y;  // c_B^T B^{-1}; reduced costs c - a^T y are >= 0 at optimum
  int iterations = 0;
};

// Full tableau with one artificial column per row. Artificial columns never
// re-enter the basis; their reduced costs are kept up to date and carry -y.
class Tableau {
 public:
  Tableau(const StandardForm& problem, const SolveOptions& options)
      : problem_(problem),
        options_(options),
        m_(static_cast<int>(problem.a.rows())),
        n_(static_cast<int>(problem.a.cols())),
        rhs_col_(n_ + m_),
        table_(Matrix::Zero(m_, n_ + m_ + 1)),
        reduced_(Vector::Zero(n_ + m_ + 1)),
        basis_(m_),
        sign_(m_) {
    for (int i = 0; i < m_; ++i) {
      sign_[i] = problem.b[i] < 0.0 ? -1.0 : 1.0;
      table_.row(i).head(n_) = sign_[i] * problem.a.row(i);
      table_(i, n_ + i) = 1.0;
      table_(i, rhs_col_) = sign_[i] * problem.b[i];
      basis_[i] = n_ + i;
    }
    degenerate_limit_ = 10 * (n_ + m_);
  }

  StandardSolution Run() {
    StandardSolution out;
    // Phase 1: minimize the sum of artificials.
    costs_ = Vector::Zero(n_ + m_ + 1);
    costs_.segment(n_, m_).setConstant(1.0);
    RefreshReducedCosts();
    if (Iterate() != Status::kOptimal) {
      throw InternalError("phase 1 of the simplex cannot be unbounded");
    }
    double scale = 1.0;
    for (int i = 0; i < m_; ++i) scale = std::max(scale, std::abs(problem_.b[i]));
    if (-reduced_[rhs_col_] > options_.feasibility_tolerance * scale) {
      out.status = Status::kInfeasible;
      out.iterations = iterations_;
      return out;
    }
    DriveOutArtificials();

    // Phase 2.
    costs_ = Vector::Zero(n_ + m_ + 1);
    costs_.head(n_) = problem_.c;
    RefreshReducedCosts();
    out.status = Iterate();
    out.iterations = iterations_;
    if (out.status != Status::kOptimal) return out;

    out.x = Vector::Zero(n_);
    out.y = Vector::Zero(m_);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = std::max(0.0, table_(i, rhs_col_));
      out.y[i] = -sign_[i] * reduced_[n_ + i];
    }
    Polish(out);
    return out;
  }

 private:
  // reduced = costs - sum_i cost(basis_i) * row_i.
  void RefreshReducedCosts() {
    reduced_ = costs_;
    for (int i = 0; i < m_; ++i) {
      const double cost = costs_[basis_[i]];
      if (cost != 0.0) reduced_ -= cost * table_.row(i).transpose();
    }
  }

  void Pivot(int row, int col) {
    const double pivot = table_(row, col);
    table_.row(row) /= pivot;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = table_(i, col);
      if (factor != 0.0) table_.row(i) -= factor * table_.row(row);
    }
    const double factor = reduced_[col];
    if (factor != 0.0) reduced_ -= factor * table_.row(row).transpose();
    basis_[row] = col;
    ++iterations_;
    if (iterations_ > 200 * (n_ + m_) + 10000) {
      throw InternalError("simplex iteration limit exceeded");
    }
  }

  int ChooseEntering() const {
    const double tol = options_.optimality_tolerance;
    int best = -1;
    double best_value = -tol;
    for (int j = 0; j < n_; ++j) {
      if (reduced_[j] < best_value) {
        if (bland_) return j;
        best = j;
        best_value = reduced_[j];
      }
    }
    return best;
  }

  // Minimum-ratio row; ties go to the smallest basic column index.
  int ChooseLeaving(int col, double* ratio) const {
    int best = -1;
    double best_ratio = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double coef = table_(i, col);
      if (coef <= kPivotTolerance) continue;
      const double r = std::max(0.0, table_(i, rhs_col_)) / coef;
      if (best < 0) {
        best = i;
        best_ratio = r;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, best_ratio);
      if (r < best_ratio - slack ||
          (r <= best_ratio + slack && basis_[i] < basis_[best])) {
        best = i;
        best_ratio = std::min(r, best_ratio);
      }
    }
    *ratio = best_ratio;
    return best;
  }

  Status Iterate() {
    while (true) {
      const int col = ChooseEntering();
      if (col < 0) return Status::kOptimal;
      double ratio = 0.0;
      int row = ChooseLeaving(col, &ratio);
      if (row < 0) {
        // The incrementally updated costs may have drifted; decide on
        // freshly priced ones.
        RefreshReducedCosts();
        if (ChooseEntering() != col) continue;
        row = ChooseLeaving(col, &ratio);
        if (row < 0) return Status::kUnbounded;
      }
      if (ratio <= 1e-12) {
        if (++degenerate_run_ > degenerate_limit_) bland_ = true;
      } else {
        degenerate_run_ = 0;
      }
      Pivot(row, col);
    }
  }

  void DriveOutArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int best = -1;
      double best_abs = kPivotTolerance;
      for (int j = 0; j < n_; ++j) {
        const double v = std::abs(table_(i, j));
        if (v > best_abs) {
          best = j;
          best_abs = v;
        }
      }
      // A row with no usable entry is redundant; its artificial stays basic
      // at level zero.
      if (best >= 0) Pivot(i, best);
    }
  }

  // Recomputes x_B and y from the final basis with a fresh factorization,
  // removing the error accumulated over the tableau updates.
  void Polish(StandardSolution& out) const {
    if (m_ == 0) return;
    Eigen::MatrixXd basis_matrix(m_, m_);
    Vector basic_costs(m_);
    for (int k = 0; k < m_; ++k) {
      const int col = basis_[k];
      if (col < n_) {
        for (int i = 0; i < m_; ++i) basis_matrix(i, k) = sign_[i] * problem_.a(i, col);
        basic_costs[k] = problem_.c[col];
      } else {
        basis_matrix.col(k).setZero();
        basis_matrix(col - n_, k) = 1.0;
        basic_costs[k] = 0.0;
      }
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    if (!(lu.rcond() > 1e-13)) return;
    Vector signed_b(m_);
    for (int i = 0; i < m_; ++i) signed_b[i] = sign_[i] * problem_.b[i];
    const Vector xb = lu.solve(signed_b);
    const Vector y = lu.transpose().solve(basic_costs);
    if (!xb.allFinite() || !y.allFinite()) return;
    for (int k = 0; k < m_; ++k) {
      if (xb[k] < -options_.feasibility_tolerance) return;
    }
    for (int k = 0; k < m_; ++k) {
      if (basis_[k] < n_) out.x[basis_[k]] = std::max(0.0, xb[k]);
    }
    for (int i = 0; i < m_; ++i) out.y[i] = sign_[i] * y[i];
  }

  const StandardForm& problem_;
  const SolveOptions& options_;
  int m_;
  int n_;
  int rhs_col_;
  Matrix table_;
  Vector costs_;    // costs of the current phase, zero in the rhs slot
  Vector reduced_;  // reduced costs; last entry is -objective
  std::vector<int> basis_;
  std::vector<double> sign_;
  int iterations_ = 0;
  int degenerate_run_ = 0;
  int degenerate_limit_ = 0;
  bool bland_ = false;
};

StandardSolution SolveStandard(const StandardForm& problem,
                               const SolveOptions& options) {
  return Tableau(problem, options).Run();
}

// min c^T z + c0  s.t.  ge z >= b_ge,  eq z = b_eq,  z >= 0, together with
// the affine map back to the caller's variables.
struct Canonical {
  struct Term {
    int z;
    double coef;
  };
  int num_z = 0;
  std::vector<std::vector<Term>> terms;  // per original variable
  std::vector<double> offset;            // per original variable
  Matrix ge;
  Vector b_ge;
  Matrix eq;
  Vector b_eq;
  Vector c;
  double c0 = 0.0;
  double objective_sign = 1.0;           // original = sign * canonical
  std::vector<int> row_of;               // original row -> canonical row
  std::vector<bool> row_is_eq;
  std::vector<double> row_sign;          // -1 when a <= row was negated
};

Canonical Canonicalize(const LinearProgram& lp) {
  Canonical out;
  const int n = lp.num_variables();
  out.terms.resize(n);
  out.offset.assign(n, 0.0);
  std::vector<std::pair<int, double>> upper_rows;  // (z, width)
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower_bound(j);
    const double up = lp.upper_bound(j);
    if (std::isfinite(lo)) {
      out.offset[j] = lo;
      out.terms[j].push_back({out.num_z, 1.0});
      if (std::isfinite(up)) upper_rows.emplace_back(out.num_z, up - lo);
      ++out.num_z;
    } else if (std::isfinite(up)) {
      out.offset[j] = up;
      out.terms[j].push_back({out.num_z++, -1.0});
    } else {
      out.terms[j].push_back({out.num_z++, 1.0});
      out.terms[j].push_back({out.num_z++, -1.0});
    }
  }
  const int nz = out.num_z;

  int num_ge = static_cast<int>(upper_rows.size());
  int num_eq = 0;
  for (const Constraint& row : lp.constraints()) {
    (row.relation == Relation::kEqual ? num_eq : num_ge)++;
  }
  out.ge = Matrix::Zero(num_ge, nz);
  out.b_ge = Vector::Zero(num_ge);
  out.eq = Matrix::Zero(num_eq, nz);
  out.b_eq = Vector::Zero(num_eq);

  int ge_row = 0;
  int eq_row = 0;
  for (const Constraint& row : lp.constraints()) {
    Eigen::RowVectorXd coef = Eigen::RowVectorXd::Zero(nz);
    double rhs = row.rhs;
    for (int j = 0; j < n; ++j) {
      const double a = row.coefficients[j];
      if (a == 0.0) continue;
      for (const Canonical::Term& t : out.terms[j]) coef[t.z] += a * t.coef;
      rhs -= a * out.offset[j];
    }
    if (row.relation == Relation::kEqual) {
      out.eq.row(eq_row) = coef;
      out.b_eq[eq_row] = rhs;
      out.row_of.push_back(eq_row++);
      out.row_is_eq.push_back(true);
      out.row_sign.push_back(1.0);
    } else {
      const double s = row.relation == Relation::kLessEqual ? -1.0 : 1.0;
      out.ge.row(ge_row) = s * coef;
      out.b_ge[ge_row] = s * rhs;
      out.row_of.push_back(ge_row++);
      out.row_is_eq.push_back(false);
      out.row_sign.push_back(s);
    }
  }
  for (const auto& [z, width] : upper_rows) {
    out.ge(ge_row, z) = -1.0;
    out.b_ge[ge_row++] = -width;
  }

  out.objective_sign = lp.sense() == Sense::kMinimize ? 1.0 : -1.0;
  out.c = Vector::Zero(nz);
  for (int j = 0; j < n; ++j) {
    const double cj = out.objective_sign * lp.objective()[j];
    for (const Canonical::Term& t : out.terms[j]) out.c[t.z] += cj * t.coef;
    out.c0 += cj * out.offset[j];
  }
  return out;
}

struct CanonicalSolution {
  Status status = Status::kInfeasible;
  Vector z;
  Vector y_ge;
  Vector y_eq;
  int iterations = 0;
};

CanonicalSolution SolvePrimalRoute(const Canonical& cf,
                                   const SolveOptions& options) {
  const int nz = cf.num_z;
  const int m1 = static_cast<int>(cf.ge.rows());
  const int m2 = static_cast<int>(cf.eq.rows());
  StandardForm sf;
  sf.a = Matrix::Zero(m1 + m2, nz + m1);
  sf.a.block(0, 0, m1, nz) = cf.ge;
  sf.a.block(0, nz, m1, m1) = -Matrix::Identity(m1, m1);
  sf.a.block(m1, 0, m2, nz) = cf.eq;
  sf.b.resize(m1 + m2);
  sf.b << cf.b_ge, cf.b_eq;
  sf.c = Vector::Zero(nz + m1);
  sf.c.head(nz) = cf.c;
  StandardSolution s = SolveStandard(sf, options);
  CanonicalSolution out;
  out.status = s.status;
  out.iterations = s.iterations;
  if (s.status == Status::kOptimal) {
    out.z = s.x.head(nz);
    out.y_ge = s.y.head(m1);
    out.y_eq = s.y.tail(m2);
  }
  return out;
}

// Pivots on the dual  max b^T y  s.t.  ge^T y_ge + eq^T y_eq <= c, y_ge >= 0,
// whose tableau has one row per canonical variable instead of one per
// constraint.
CanonicalSolution SolveDualRoute(const Canonical& cf,
                                 const SolveOptions& options) {
  const int nz = cf.num_z;
  const int m1 = static_cast<int>(cf.ge.rows());
  const int m2 = static_cast<int>(cf.eq.rows());
  StandardForm sf;
  const int cols = m1 + 2 * m2 + nz;
  sf.a = Matrix::Zero(nz, cols);
  sf.a.block(0, 0, nz, m1) = cf.ge.transpose();
  sf.a.block(0, m1, nz, m2) = cf.eq.transpose();
  sf.a.block(0, m1 + m2, nz, m2) = -cf.eq.transpose();
  sf.a.block(0, m1 + 2 * m2, nz, nz) = Matrix::Identity(nz, nz);
  sf.b = cf.c;
  sf.c = Vector::Zero(cols);
  sf.c.head(m1) = -cf.b_ge;
  sf.c.segment(m1, m2) = -cf.b_eq;
  sf.c.segment(m1 + m2, m2) = cf.b_eq;
  StandardSolution s = SolveStandard(sf, options);
  CanonicalSolution out;
  out.iterations = s.iterations;
  if (s.status == Status::kUnbounded) {
    out.status = Status::kInfeasible;
    return out;
  }
  if (s.status == Status::kInfeasible) {
    // Dual infeasible: the primal is unbounded or infeasible. Let the primal
    // tableau tell the two apart.
    CanonicalSolution primal = SolvePrimalRoute(cf, options);
    primal.iterations += out.iterations;
    return primal;
  }
  out.status = Status::kOptimal;
  out.y_ge = s.x.head(m1);
  out.y_eq = s.x.segment(m1, m2) - s.x.segment(m1 + m2, m2);
  out.z = (-s.y).cwiseMax(0.0);
  return out;
}

SolveResult SolveOnRoute(const LinearProgram& lp, const Canonical& cf,
                         bool use_dual, const SolveOptions& options) {
  const CanonicalSolution cs =
      use_dual ? SolveDualRoute(cf, options) : SolvePrimalRoute(cf, options);

  SolveResult result;
  result.status = cs.status;
  result.iterations = cs.iterations;
  if (cs.status != Status::kOptimal) return result;

  const int n = lp.num_variables();
  result.primal.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    double v = cf.offset[j];
    for (const Canonical::Term& t : cf.terms[j]) v += t.coef * cs.z[t.z];
    result.primal[j] = v;
  }
  result.objective = 0.0;
  for (int j = 0; j < n; ++j) result.objective += lp.objective()[j] * result.primal[j];

  result.duals.assign(lp.num_constraints(), 0.0);
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const double y = cf.row_is_eq[i] ? cs.y_eq[cf.row_of[i]] : cs.y_ge[cf.row_of[i]];
    result.duals[i] = cf.objective_sign * cf.row_sign[i] * y;
  }
  const double canonical_dual =
      cf.b_ge.dot(cs.y_ge) + cf.b_eq.dot(cs.y_eq) + cf.c0;
  result.dual_objective = cf.objective_sign * canonical_dual;
  return result;
}

// An optimal answer is accepted when its point is feasible and its duality
// gap is closed, both relative to the scale of the data.
bool Certified(const LinearProgram& lp, const SolveResult& r,
               const SolveOptions& options) {
  if (r.status != Status::kOptimal) return false;
  double scale = 1.0;
  for (const Constraint& row : lp.constraints()) {
    scale = std::max(scale, std::abs(row.rhs));
  }
  if (MaxViolation(lp, r.primal) > 100.0 * options.feasibility_tolerance * scale) {
    return false;
  }
  const double gap = std::abs(r.objective - r.dual_objective);
  return gap <= 1e-6 * std::max(1.0, std::abs(r.objective));
}

}  // namespace

SolveResult Solve(const LinearProgram& lp, const SolveOptions& options) {
  lp.Validate();
  const Canonical cf = Canonicalize(lp);
  const int rows = static_cast<int>(cf.ge.rows() + cf.eq.rows());
  if (options.route != Route::kAuto) {
    return SolveOnRoute(lp, cf, options.route == Route::kDual, options);
  }
  // Pivot on the side with fewer rows; if that answer is not certified,
  // the other side decides.
  const bool prefer_dual = rows > cf.num_z;
  std::optional<SolveResult> first;
  try {
    first = SolveOnRoute(lp, cf, prefer_dual, options);
    if (Certified(lp, *first, options)) return *first;
  } catch (const InternalError&) {
  }
  try {
    SolveResult second = SolveOnRoute(lp, cf, !prefer_dual, options);
    if (first) second.iterations += first->iterations;
    if (Certified(lp, second, options) || !first) return second;
    if (first->status == Status::kOptimal) return *first;
    return second;
  } catch (const InternalError&) {
    if (first) return *first;
    throw;
  }
}

double MaxViolation(const LinearProgram& lp, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != lp.num_variables()) {
    throw StructuralError("point has the wrong dimension");
  }
  double worst = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    worst = std::max(worst, lp.lower_bound(j) - x[j]);
    worst = std::max(worst, x[j] - lp.upper_bound(j));
  }
  for (const Constraint& row : lp.constraints()) {
    double lhs = 0.0;
    for (int j = 0; j < lp.num_variables(); ++j) lhs += row.coefficients[j] * x[j];
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

}  // namespace gmmc::lp
