// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace uavirs {

/// Index of a real scalar variable in a ConicProgram.
using VarId = int;

/// sum coef * var + constant.
struct AffineExpr {
  std::vector<std::pair<VarId, double>> terms;
  double constant = 0.0;

  AffineExpr() = default;
  AffineExpr(double c) : constant(c) {}  // NOLINT(google-explicit-constructor)
  static AffineExpr var(VarId v, double coef = 1.0) {
    AffineExpr e;
    e.terms.emplace_back(v, coef);
    return e;
  }

  AffineExpr& add(VarId v, double coef) {
    terms.emplace_back(v, coef);
    return *this;
  }
  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator*=(double s);
  double evaluate(const std::vector<double>& x) const;
};

AffineExpr operator+(AffineExpr a, const AffineExpr& b);
AffineExpr operator-(AffineExpr a, const AffineExpr& b);
AffineExpr operator*(double s, AffineExpr a);

enum class ConeKind {
  Zero,         // every row == 0
  Nonnegative,  // every row >= 0
  SecondOrder,  // row0 >= |rows 1..|
  RotatedSecondOrder,  // row0 * row1 >= |rows 2..|^2, row0, row1 >= 0
  Power,        // row0^a row1^(1-a) >= |row2|, row0, row1 >= 0
  Exponential,  // row1 exp(row0 / row1) <= row2, row1 > 0
};

const char* cone_tag(ConeKind kind);

struct Constraint {
  ConeKind kind = ConeKind::Nonnegative;
  std::vector<AffineExpr> rows;
  double param = 0.0;  // exponent a of a power cone
  std::string label;
};

/// Convex program over real scalars: maximize a linear objective subject to
/// membership of affine expressions in the cones above. Complex quantities
/// are stored by the callers as separate real and imaginary variables.
class ConicProgram {
 public:
  VarId add_variable(std::string name);
  std::vector<VarId> add_variables(const std::string& prefix, int count);

  int n_variables() const { return static_cast<int>(names_.size()); }
  const std::string& name(VarId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  /// -1 if absent.
  VarId find(const std::string& name) const;

  /// Returns the index of the new constraint.
  int add(Constraint c);
  int add_zero(AffineExpr e, std::string label = {});
  int add_nonneg(AffineExpr e, std::string label = {});
  int add_le(AffineExpr lhs, const AffineExpr& rhs, std::string label = {});
  int add_soc(AffineExpr bound, std::vector<AffineExpr> rest, std::string label = {});
  int add_rotated_soc(AffineExpr y, AffineExpr z, std::vector<AffineExpr> rest,
                      std::string label = {});
  int add_power(AffineExpr x, AffineExpr y, AffineExpr z, double a, std::string label = {});
  int add_exp(AffineExpr x, AffineExpr y, AffineExpr z, std::string label = {});

  void set_objective(AffineExpr e) { objective_ = std::move(e); }
  const AffineExpr& objective() const { return objective_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  int n_constraints() const { return static_cast<int>(constraints_.size()); }

  /// Count of constraints of one kind.
  int count(ConeKind kind) const;

  /// Throws std::logic_error on an undeclared variable or a bad cone size.
  void validate() const;

  /// Copy with the constant of every row shifted toward feasibility by `eps`.
  ConicProgram relaxed(double eps) const;

  /// One line per variable, objective and constraint, 17 significant digits.
  std::string dump() const;
  static ConicProgram parse(const std::string& text);

  bool structurally_equal(const ConicProgram& other) const;

 private:
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
  AffineExpr objective_;
};

/// ||d||^abar <= bound * scale^abar, i.e. ||d|| <= scale * bound^(1/abar).
/// Adds an auxiliary q = bound^(1/abar) through a power cone and a
/// second-order cone on (scale q, d). Returns the index of the power cone.
int add_power_cone_norm(ConicProgram& prog, const std::vector<AffineExpr>& d, double abar,
                        const AffineExpr& bound, double scale = 1.0,
                        const std::string& label = "normpow");

enum class SolveStatus { Optimal, Infeasible, NumericalLimit };

const char* status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::NumericalLimit;
  double objective = 0.0;
  std::vector<double> x;
  int iterations = 0;
  double wall_ms = 0.0;
  /// Backend status before verification, for diagnostics.
  std::string backend_status;
};

struct SolverOptions {
  double tolerance = 1e-8;
  double verify_tolerance = 1e-6;
  int max_iter = 200;
  bool verbose = false;
};

struct ConstraintResidual {
  int index = 0;
  double violation = 0.0;
};

struct VerificationReport {
  std::vector<ConstraintResidual> residuals;
  double max_violation = 0.0;
  int worst = -1;
  bool ok = true;
};

/// Violation of one constraint at x, normalized by 1 + the largest row
/// magnitude so that it reads as a relative error.
double constraint_violation(const Constraint& c, const std::vector<double>& x);

/// Independent residual recomputation; flags anything above `tol`.
VerificationReport verify_solution(const ConicProgram& prog, const std::vector<double>& x,
                                   double tol);

/// Solves with the Clarabel interior-point backend. `Optimal` is returned only
/// if verify_solution passes at options.verify_tolerance.
SolveResult solve(const ConicProgram& prog, const SolverOptions& options = {});

}  // namespace uavirs
