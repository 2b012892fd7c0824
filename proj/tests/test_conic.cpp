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


#include <doctest.h>

#include <cmath>

#include "uavirs/conic.hpp"
#include "uavirs/scenario.hpp"

using namespace uavirs;

namespace {

AffineExpr v(VarId id, double c = 1.0) { return AffineExpr::var(id, c); }

}  // namespace

TEST_CASE("LP with a known optimum") {
  ConicProgram p;
  const VarId x = p.add_variable("x");
  p.add_le(v(x), 3.0, "cap");
  p.set_objective(v(x));
  const SolveResult r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.x[x] == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(r.objective == doctest::Approx(3.0).epsilon(1e-7));
  const VerificationReport rep = verify_solution(p, r.x, 1e-9);
  CHECK(rep.ok);
  CHECK(rep.max_violation <= 1e-8);
}

TEST_CASE("infeasible LP is reported") {
  ConicProgram p;
  const VarId x = p.add_variable("x");
  p.add_le(v(x), 1.0);
  p.add_le(2.0, v(x));
  p.set_objective(v(x));
  CHECK(solve(p).status == SolveStatus::Infeasible);
}

TEST_CASE("rotated cone at a known feasible point") {
  // |x|^2 / y <= tau with x = 3 + 4i, y = 5, tau = 5.
  ConicProgram p;
  const VarId re = p.add_variable("re"), im = p.add_variable("im"), y = p.add_variable("y"),
              t = p.add_variable("tau");
  p.add_rotated_soc(v(y), v(t), {v(re), v(im)}, "qol");
  const std::vector<double> at{3.0, 4.0, 5.0, 5.0};
  CHECK(verify_solution(p, at, 1e-8).max_violation <= 1e-8);
  // Minimizing tau with the rest pinned recovers |x|^2 / y.
  p.add_zero(v(re) - 3.0);
  p.add_zero(v(im) - 4.0);
  p.add_zero(v(y) - 5.0);
  p.set_objective(v(t, -1.0));
  const SolveResult r = solve(p);
  REQUIRE(r.status == SolveStatus::Optimal);
  CHECK(r.x[t] == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("corrupted assignment is flagged") {
  ConicProgram p;
  const VarId a = p.add_variable("a"), b = p.add_variable("b"), c = p.add_variable("c");
  p.add_soc(v(a), {v(b), v(c)}, "soc");
  p.add_nonneg(v(b));
  CHECK(verify_solution(p, {5.0, 3.0, 4.0}, 1e-9).ok);
  const VerificationReport bad = verify_solution(p, {5.0, 3.0, 4.5}, 1e-6);
  CHECK_FALSE(bad.ok);
  CHECK(bad.worst == 0);
  const VerificationReport neg = verify_solution(p, {5.0, -0.1, 0.0}, 1e-6);
  CHECK_FALSE(neg.ok);
  CHECK(neg.worst == 1);
}

TEST_CASE("exponential and power cones") {
  {
    // max t with t <= ln(1 + lambda), lambda <= 3.
    ConicProgram p;
    const VarId t = p.add_variable("t"), l = p.add_variable("lambda");
    p.add_exp(v(t), 1.0, v(l) + 1.0, "rate");
    p.add_le(v(l), 3.0);
    p.set_objective(v(t));
    const SolveResult r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(std::log(4.0)).epsilon(1e-7));
  }
  {
    // max z with x^(1/3) y^(2/3) >= |z|, x = 8, y = 1.
    ConicProgram p;
    const VarId x = p.add_variable("x"), y = p.add_variable("y"), z = p.add_variable("z");
    p.add_power(v(x), v(y), v(z), 1.0 / 3.0, "pow");
    p.add_zero(v(x) - 8.0);
    p.add_zero(v(y) - 1.0);
    p.set_objective(v(z));
    const SolveResult r = solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(2.0).epsilon(1e-7));
  }
}

namespace {

// Feasibility of ||d||^abar <= rho with d and rho pinned.
SolveStatus classify(const Vec3& d, double abar, double rho, double scale = 1.0) {
  ConicProgram p;
  const auto dv = p.add_variables("d", 3);
  const VarId r = p.add_variable("rho");
  for (int i = 0; i < 3; ++i) p.add_zero(v(dv[i]) - d(i));
  p.add_zero(v(r) - rho);
  add_power_cone_norm(p, {v(dv[0]), v(dv[1]), v(dv[2])}, abar, v(r), scale);
  p.set_objective(0.0);
  SolverOptions o;
  o.tolerance = 1e-9;
  return solve(p, o).status;
}

}  // namespace

TEST_CASE("power-cone norm boundary") {
  const Vec3 d(0.0, 0.0, 25.0);
  const double rho = std::pow(25.0, 5.0);
  CHECK(classify(d, 5.0, rho) == SolveStatus::Optimal);
  // Scaled form: ||d||^5 <= rho' * 25^5 with rho' = 1 is the same boundary.
  CHECK(classify(d, 5.0, 1.0, 25.0) == SolveStatus::Optimal);
  CHECK(classify(d, 5.0, rho - 1.0) == SolveStatus::Infeasible);
  CHECK(classify(d, 5.0, (rho - 1.0) / rho, 25.0) == SolveStatus::Infeasible);

  ConicProgram p;
  const VarId r = p.add_variable("rho");
  CHECK_THROWS(add_power_cone_norm(p, {0.0, 0.0, 0.0}, 0.5, v(r)));
}

TEST_CASE("power-cone norm classifies random pairs") {
  Rng rng(21);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    const Vec3 d(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(0.5, 3));
    const double abar = rng.uniform(1.0, 6.0);
    const double exact = std::pow(d.norm(), abar);
    // Margins well above the 1e-7 classification tolerance.
    const double factor = i % 2 == 0 ? 1.0 + rng.uniform(1e-5, 0.5) : 1.0 - rng.uniform(1e-5, 0.5);
    const SolveStatus s = classify(d, abar, exact * factor);
    CHECK(s == (factor > 1.0 ? SolveStatus::Optimal : SolveStatus::Infeasible));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("dump and parse round trip") {
  ConicProgram p;
  const auto x = p.add_variables("x", 4);
  p.add_zero(v(x[0]) - 0.1, "eq");
  p.add_nonneg(v(x[1], 2.5) + v(x[2], -1.0 / 3.0) + 7.0);
  p.add_soc(v(x[3]), {v(x[0]), v(x[1]) + 1e-17});
  p.add_rotated_soc(v(x[0]), v(x[1]), {v(x[2]), v(x[3])}, "rot");
  p.add_power(v(x[0]), 1.0, v(x[2]), 1.0 / 5.2, "pw");
  p.add_exp(v(x[3]), 1.0, v(x[0]) + 1.0, "ex");
  p.set_objective(v(x[3], 1e7) + v(x[2], -2.0));
  p.validate();

  const std::string text = p.dump();
  const ConicProgram q = ConicProgram::parse(text);
  CHECK(p.structurally_equal(q));
  CHECK(q.dump() == text);
  CHECK(q.constraints()[4].param == 1.0 / 5.2);
  CHECK(q.count(ConeKind::Power) == 1);

  ConicProgram other = q;
  other.add_nonneg(v(x[0]));
  CHECK_FALSE(p.structurally_equal(other));
}

TEST_CASE("validation rejects malformed programs") {
  ConicProgram p;
  const VarId x = p.add_variable("x");
  p.add_nonneg(v(x + 5));
  CHECK_THROWS_AS(p.validate(), std::logic_error);

  ConicProgram q;
  const VarId y = q.add_variable("y");
  q.add_soc(v(y), {});
  q.add({ConeKind::Power, {v(y), v(y)}, 0.5, "short"});
  CHECK_THROWS_AS(q.validate(), std::logic_error);
}

TEST_CASE("relaxation widens every inequality") {
  ConicProgram p;
  const VarId x = p.add_variable("x"), y = p.add_variable("y");
  p.add_zero(v(x) - 1.0);
  p.add_le(v(x), 1.0);
  p.add_soc(v(y), {v(x)});
  p.add_rotated_soc(v(x), v(y), {v(x)});
  p.add_exp(v(x), 1.0, v(y));
  const ConicProgram r = p.relaxed(1e-3);
  CHECK(r.constraints()[0].rows[0].constant == -1.0);
  CHECK(r.constraints()[1].rows[0].constant == doctest::Approx(1.0 + 1e-3));
  CHECK(r.constraints()[2].rows[0].constant == doctest::Approx(1e-3));
  CHECK(r.constraints()[3].rows[0].constant == doctest::Approx(1e-3));
  CHECK(r.constraints()[3].rows[1].constant == doctest::Approx(1e-3));
  CHECK(r.constraints()[4].rows[2].constant == doctest::Approx(1e-3));
  // (1, 1) is on the boundary of the first four constraints of p.
  const std::vector<double> at{1.0, 1.0};
  for (int i = 0; i < 4; ++i) CHECK(constraint_violation(r.constraints()[i], at) == 0.0);
}
