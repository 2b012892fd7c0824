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

#include "uavirs/conic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <clarabel_ffi.h>

namespace uavirs {

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  constant += o.constant;
  return *this;
}

AffineExpr& AffineExpr::operator*=(double s) {
  for (auto& t : terms) t.second *= s;
  constant *= s;
  return *this;
}

double AffineExpr::evaluate(const std::vector<double>& x) const {
  double acc = constant;
  for (const auto& [v, c] : terms) acc += c * x.at(v);
  return acc;
}

AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a += (-1.0) * b; }
AffineExpr operator*(double s, AffineExpr a) { return a *= s; }

const char* cone_tag(ConeKind kind) {
  switch (kind) {
    case ConeKind::Zero: return "zero";
    case ConeKind::Nonnegative: return "nonneg";
    case ConeKind::SecondOrder: return "soc";
    case ConeKind::RotatedSecondOrder: return "rsoc";
    case ConeKind::Power: return "pow";
    case ConeKind::Exponential: return "exp";
  }
  return "?";
}

namespace {

ConeKind cone_from_tag(const std::string& tag) {
  for (ConeKind k : {ConeKind::Zero, ConeKind::Nonnegative, ConeKind::SecondOrder,
                     ConeKind::RotatedSecondOrder, ConeKind::Power, ConeKind::Exponential})
    if (tag == cone_tag(k)) return k;
  throw std::invalid_argument("unknown cone tag: " + tag);
}

}  // namespace

VarId ConicProgram::add_variable(std::string name) {
  names_.push_back(std::move(name));
  return static_cast<VarId>(names_.size() - 1);
}

std::vector<VarId> ConicProgram::add_variables(const std::string& prefix, int count) {
  std::vector<VarId> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(add_variable(prefix + "[" + std::to_string(i) + "]"));
  return out;
}

VarId ConicProgram::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<VarId>(it - names_.begin());
}

int ConicProgram::add(Constraint c) {
  constraints_.push_back(std::move(c));
  return static_cast<int>(constraints_.size() - 1);
}

int ConicProgram::add_zero(AffineExpr e, std::string label) {
  return add(Constraint{ConeKind::Zero, {std::move(e)}, 0.0, std::move(label)});
}

int ConicProgram::add_nonneg(AffineExpr e, std::string label) {
  return add(Constraint{ConeKind::Nonnegative, {std::move(e)}, 0.0, std::move(label)});
}

int ConicProgram::add_le(AffineExpr lhs, const AffineExpr& rhs, std::string label) {
  return add_nonneg(rhs - lhs, std::move(label));
}

int ConicProgram::add_soc(AffineExpr bound, std::vector<AffineExpr> rest, std::string label) {
  rest.insert(rest.begin(), std::move(bound));
  return add(Constraint{ConeKind::SecondOrder, std::move(rest), 0.0, std::move(label)});
}

int ConicProgram::add_rotated_soc(AffineExpr y, AffineExpr z, std::vector<AffineExpr> rest,
                                  std::string label) {
  rest.insert(rest.begin(), std::move(z));
  rest.insert(rest.begin(), std::move(y));
  return add(Constraint{ConeKind::RotatedSecondOrder, std::move(rest), 0.0, std::move(label)});
}

int ConicProgram::add_power(AffineExpr x, AffineExpr y, AffineExpr z, double a, std::string label) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("power cone exponent must be in (0, 1)");
  return add(Constraint{ConeKind::Power, {std::move(x), std::move(y), std::move(z)}, a,
                        std::move(label)});
}

int ConicProgram::add_exp(AffineExpr x, AffineExpr y, AffineExpr z, std::string label) {
  return add(Constraint{ConeKind::Exponential, {std::move(x), std::move(y), std::move(z)}, 0.0,
                        std::move(label)});
}

int ConicProgram::count(ConeKind kind) const {
  return static_cast<int>(std::count_if(constraints_.begin(), constraints_.end(),
                                        [kind](const Constraint& c) { return c.kind == kind; }));
}

void ConicProgram::validate() const {
  const int n = n_variables();
  auto check_expr = [n](const AffineExpr& e) {
    for (const auto& [v, c] : e.terms) {
      if (v < 0 || v >= n) throw std::logic_error("constraint references an undeclared variable");
      if (!std::isfinite(c)) throw std::logic_error("non-finite coefficient");
    }
    if (!std::isfinite(e.constant)) throw std::logic_error("non-finite constant");
  };
  check_expr(objective_);
  for (const Constraint& c : constraints_) {
    for (const AffineExpr& e : c.rows) check_expr(e);
    const std::size_t r = c.rows.size();
    bool ok = true;
    switch (c.kind) {
      case ConeKind::Zero:
      case ConeKind::Nonnegative: ok = r >= 1; break;
      case ConeKind::SecondOrder: ok = r >= 2; break;
      case ConeKind::RotatedSecondOrder: ok = r >= 3; break;
      case ConeKind::Power: ok = r == 3 && c.param > 0.0 && c.param < 1.0; break;
      case ConeKind::Exponential: ok = r == 3; break;
    }
    if (!ok) throw std::logic_error("bad cone dimension in constraint '" + c.label + "'");
  }
}

ConicProgram ConicProgram::relaxed(double eps) const {
  ConicProgram out = *this;
  for (Constraint& c : out.constraints_) {
    switch (c.kind) {
      case ConeKind::Zero: break;
      case ConeKind::Nonnegative:
        for (AffineExpr& e : c.rows) e.constant += eps;
        break;
      case ConeKind::SecondOrder: c.rows[0].constant += eps; break;
      case ConeKind::RotatedSecondOrder:
      case ConeKind::Power:
        c.rows[0].constant += eps;
        c.rows[1].constant += eps;
        break;
      case ConeKind::Exponential: c.rows[2].constant += eps; break;
    }
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_expr(const AffineExpr& e, const std::vector<std::string>& names) {
  std::string s = fmt(e.constant);
  for (const auto& [v, c] : e.terms) s += " " + fmt(c) + "*" + names.at(v);
  return s;
}

AffineExpr parse_expr(const std::string& text,
                      const std::unordered_map<std::string, VarId>& index) {
  std::istringstream is(text);
  AffineExpr e;
  std::string tok;
  if (!(is >> tok)) throw std::invalid_argument("empty affine expression");
  e.constant = std::stod(tok);
  while (is >> tok) {
    const auto star = tok.find('*');
    if (star == std::string::npos) throw std::invalid_argument("bad term: " + tok);
    const auto it = index.find(tok.substr(star + 1));
    if (it == index.end()) throw std::invalid_argument("unknown variable in term: " + tok);
    e.terms.emplace_back(it->second, std::stod(tok.substr(0, star)));
  }
  return e;
}

}  // namespace

std::string ConicProgram::dump() const {
  std::ostringstream os;
  for (const std::string& n : names_) os << "var " << n << '\n';
  os << "max " << dump_expr(objective_, names_) << '\n';
  for (const Constraint& c : constraints_) {
    os << cone_tag(c.kind);
    if (c.kind == ConeKind::Power) os << " a=" << fmt(c.param);
    os << ' ' << (c.label.empty() ? "-" : c.label) << " :";
    for (std::size_t i = 0; i < c.rows.size(); ++i)
      os << (i == 0 ? " " : " | ") << dump_expr(c.rows[i], names_);
    os << '\n';
  }
  return os.str();
}

ConicProgram ConicProgram::parse(const std::string& text) {
  ConicProgram prog;
  std::unordered_map<std::string, VarId> index;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    if (line.rfind("var ", 0) == 0) {
      const std::string name = line.substr(4);
      index[name] = prog.add_variable(name);
      continue;
    }
    if (line.rfind("max ", 0) == 0) {
      prog.objective_ = parse_expr(line.substr(4), index);
      continue;
    }
    const auto colon = line.find(" :");
    if (colon == std::string::npos) throw std::invalid_argument("bad constraint line: " + line);
    std::istringstream head(line.substr(0, colon));
    std::string tag;
    std::string label;
    head >> tag;
    Constraint c;
    c.kind = cone_from_tag(tag);
    if (c.kind == ConeKind::Power) {
      std::string a;
      head >> a;
      if (a.rfind("a=", 0) != 0) throw std::invalid_argument("power cone without exponent");
      c.param = std::stod(a.substr(2));
    }
    head >> label;
    c.label = label == "-" ? "" : label;
    std::string body = line.substr(colon + 2);
    std::size_t start = 0;
    while (true) {
      const auto bar = body.find(" | ", start);
      c.rows.push_back(parse_expr(body.substr(start, bar - start), index));
      if (bar == std::string::npos) break;
      start = bar + 3;
    }
    prog.constraints_.push_back(std::move(c));
  }
  prog.validate();
  return prog;
}

namespace {

bool expr_equal(const AffineExpr& a, const AffineExpr& b) {
  return a.constant == b.constant && a.terms == b.terms;
}

}  // namespace

bool ConicProgram::structurally_equal(const ConicProgram& other) const {
  if (names_ != other.names_ || !expr_equal(objective_, other.objective_)) return false;
  if (constraints_.size() != other.constraints_.size()) return false;
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const Constraint& a = constraints_[i];
    const Constraint& b = other.constraints_[i];
    if (a.kind != b.kind || a.param != b.param || a.label != b.label ||
        a.rows.size() != b.rows.size())
      return false;
    for (std::size_t r = 0; r < a.rows.size(); ++r)
      if (!expr_equal(a.rows[r], b.rows[r])) return false;
  }
  return true;
}

int add_power_cone_norm(ConicProgram& prog, const std::vector<AffineExpr>& d, double abar,
                        const AffineExpr& bound, double scale, const std::string& label) {
  if (!(abar >= 1.0)) throw std::invalid_argument("add_power_cone_norm: exponent must be >= 1");
  if (!(scale > 0.0)) throw std::invalid_argument("add_power_cone_norm: scale must be positive");
  const VarId q = prog.add_variable(label + "_root");
  int handle;
  if (abar == 1.0) {
    handle = prog.add_le(AffineExpr::var(q), bound, label + "_pow");
  } else {
    handle = prog.add_power(bound, AffineExpr(1.0), AffineExpr::var(q), 1.0 / abar, label + "_pow");
  }
  prog.add_soc(AffineExpr::var(q, scale), d, label + "_soc");
  return handle;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::NumericalLimit: return "numerical-limit";
  }
  return "?";
}

double constraint_violation(const Constraint& c, const std::vector<double>& x) {
  std::vector<double> v;
  v.reserve(c.rows.size());
  double scale = 1.0;
  for (const AffineExpr& e : c.rows) {
    v.push_back(e.evaluate(x));
    scale = std::max(scale, 1.0 + std::abs(v.back()));
  }
  double viol = 0.0;
  auto tail_norm = [&v](std::size_t from) {
    double s = 0.0;
    for (std::size_t i = from; i < v.size(); ++i) s += v[i] * v[i];
    return std::sqrt(s);
  };
  switch (c.kind) {
    case ConeKind::Zero:
      for (double r : v) viol = std::max(viol, std::abs(r));
      break;
    case ConeKind::Nonnegative:
      for (double r : v) viol = std::max(viol, -r);
      break;
    case ConeKind::SecondOrder: viol = tail_norm(1) - v[0]; break;
    case ConeKind::RotatedSecondOrder: {
      const double t = tail_norm(2);
      const double lowered = std::hypot(v[0] - v[1], 2.0 * t) - (v[0] + v[1]);
      viol = std::max({-v[0], -v[1], 0.5 * lowered});
      break;
    }
    case ConeKind::Power: {
      const double a = c.param;
      const double x0 = std::max(v[0], 0.0);
      const double y0 = std::max(v[1], 0.0);
      viol = std::max({-v[0], -v[1], std::abs(v[2]) - std::pow(x0, a) * std::pow(y0, 1.0 - a)});
      break;
    }
    case ConeKind::Exponential:
      if (v[1] > 0.0)
        viol = v[1] * std::exp(v[0] / v[1]) - v[2];
      else
        viol = std::max({-v[1], v[0], -v[2]});
      break;
  }
  return std::max(viol, 0.0) / scale;
}

VerificationReport verify_solution(const ConicProgram& prog, const std::vector<double>& x,
                                   double tol) {
  VerificationReport rep;
  if (static_cast<int>(x.size()) != prog.n_variables()) {
    rep.ok = false;
    rep.max_violation = INFINITY;
    return rep;
  }
  for (int i = 0; i < prog.n_constraints(); ++i) {
    const double viol = constraint_violation(prog.constraints()[i], x);
    rep.residuals.push_back({i, viol});
    if (!(viol <= rep.max_violation)) {
      rep.max_violation = viol;
      rep.worst = i;
    }
  }
  rep.ok = rep.max_violation <= tol;
  return rep;
}

namespace {

struct StandardForm {
  std::size_t m = 0;
  std::vector<std::size_t> rows, cols;
  std::vector<double> vals, b;
  std::vector<int32_t> cone_types;
  std::vector<std::size_t> cone_dims;
  std::vector<double> cone_params;
};

// Appends e as row `m` of s = b - A x.
void push_row(StandardForm& f, const AffineExpr& e, double scale = 1.0) {
  for (const auto& [v, c] : e.terms) {
    f.rows.push_back(f.m);
    f.cols.push_back(static_cast<std::size_t>(v));
    f.vals.push_back(-scale * c);
  }
  f.b.push_back(scale * e.constant);
  ++f.m;
}

void push_cone(StandardForm& f, int32_t type, std::size_t dim, double param = 0.0) {
  const bool mergeable = type == CF_CONE_ZERO || type == CF_CONE_NONNEGATIVE;
  if (mergeable && !f.cone_types.empty() && f.cone_types.back() == type) {
    f.cone_dims.back() += dim;
    return;
  }
  f.cone_types.push_back(type);
  f.cone_dims.push_back(dim);
  f.cone_params.push_back(param);
}

StandardForm lower(const ConicProgram& prog) {
  StandardForm f;
  for (const Constraint& c : prog.constraints()) {
    switch (c.kind) {
      case ConeKind::Zero:
        for (const AffineExpr& e : c.rows) push_row(f, e);
        push_cone(f, CF_CONE_ZERO, c.rows.size());
        break;
      case ConeKind::Nonnegative:
        for (const AffineExpr& e : c.rows) push_row(f, e);
        push_cone(f, CF_CONE_NONNEGATIVE, c.rows.size());
        break;
      case ConeKind::SecondOrder:
        for (const AffineExpr& e : c.rows) push_row(f, e);
        push_cone(f, CF_CONE_SECOND_ORDER, c.rows.size());
        break;
      case ConeKind::RotatedSecondOrder:
        // y z >= |r|^2  <=>  (y + z, y - z, 2 r) in the second-order cone.
        push_row(f, c.rows[0] + c.rows[1]);
        push_row(f, c.rows[0] - c.rows[1]);
        for (std::size_t i = 2; i < c.rows.size(); ++i) push_row(f, c.rows[i], 2.0);
        push_cone(f, CF_CONE_SECOND_ORDER, c.rows.size());
        break;
      case ConeKind::Power:
        for (const AffineExpr& e : c.rows) push_row(f, e);
        push_cone(f, CF_CONE_POWER, 3, c.param);
        break;
      case ConeKind::Exponential:
        for (const AffineExpr& e : c.rows) push_row(f, e);
        push_cone(f, CF_CONE_EXPONENTIAL, 3);
        break;
    }
  }
  return f;
}

const char* backend_status_name(int32_t code) {
  switch (code) {
    case 0: return "solved";
    case 1: return "almost-solved";
    case 2: return "primal-infeasible";
    case 3: return "dual-infeasible";
    case 4: return "iteration-limit";
    case 5: return "numerical-error";
    default: return "setup-error";
  }
}

}  // namespace

SolveResult solve(const ConicProgram& prog, const SolverOptions& options) {
  prog.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = static_cast<std::size_t>(prog.n_variables());
  StandardForm f = lower(prog);

  std::vector<double> q(n, 0.0);
  for (const auto& [v, c] : prog.objective().terms) q[static_cast<std::size_t>(v)] -= c;

  CfSettings settings{options.tolerance, options.tolerance, options.tolerance,
                      static_cast<uint32_t>(options.max_iter), options.verbose ? 1 : 0};
  std::vector<double> x(n, 0.0), s(f.m, 0.0), z(f.m, 0.0);
  CfInfo info{};
  const int rc = cf_solve(n, f.m, q.data(), f.vals.size(), f.rows.data(), f.cols.data(),
                          f.vals.data(), f.b.data(), f.cone_types.size(), f.cone_types.data(),
                          f.cone_dims.data(), f.cone_params.data(), &settings, x.data(), s.data(),
                          z.data(), &info);

  SolveResult res;
  res.iterations = static_cast<int>(info.iterations);
  res.backend_status = rc != 0 ? "setup-error" : backend_status_name(info.status);
  if (rc == 0 && (info.status == 0 || info.status == 1)) {
    const VerificationReport rep = verify_solution(prog, x, options.verify_tolerance);
    res.status = rep.ok ? SolveStatus::Optimal : SolveStatus::NumericalLimit;
  } else if (rc == 0 && info.status == 2) {
    res.status = SolveStatus::Infeasible;
  } else {
    res.status = SolveStatus::NumericalLimit;
  }
  res.x = std::move(x);
  res.objective = prog.objective().evaluate(res.x);
  res.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace uavirs
