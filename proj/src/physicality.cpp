// Copyright 2026 The bonafide Authors
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

#include "bonafide/physicality.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bonafide/errors.hpp"
#include "bonafide/invariants.hpp"
#include "bonafide/standard_form.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

bool Margin::within_band(double widen) const noexcept {
  return std::abs(value) <= widen * bound;
}

const Margin& find_margin(const Margins& margins, std::string_view name) {
  for (const auto& m : margins) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("no margin named " + std::string(name));
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Oracle: return "oracle";
    case Route::Global: return "global";
    case Route::Local: return "local";
  }
  return "unknown";
}

namespace {

BonaFideReport finish(Route route, Margins margins) {
  BonaFideReport r;
  r.route = route;
  r.verdict = std::all_of(margins.begin(), margins.end(),
                          [](const Margin& m) { return m.passes(); });
  r.borderline = std::any_of(margins.begin(), margins.end(),
                             [](const Margin& m) { return m.within_band(); });
  r.margins = std::move(margins);
  return r;
}

Margin delta_margin(double det_v, double delta, double scale, const Tolerance& tol) {
  return {"one_plus_det_V_minus_delta", 1.0 + det_v - delta,
          tol.bound(std::max({scale, 1.0 + std::abs(det_v), std::abs(delta)}))};
}

}  // namespace

double min_eigenvalue(const MatrixValue& m) {
  if (!m.is_square()) throw DimensionError("min_eigenvalue needs a square matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.eigen(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  return solver.eigenvalues()(0);
}

bool is_positive_definite(const MatrixValue& m, const Tolerance& tol) {
  require_symmetric(m, tol);
  return min_eigenvalue(m) > tol.bound(m.max_abs());
}

HeisenbergResult heisenberg_oracle(const MatrixValue& v, const Tolerance& tol) {
  require_symmetric(v, tol);
  if (v.rows() % 2 != 0) throw DimensionError("V + i Omega needs even dimension");
  const Eigen::MatrixXcd h =
      v.eigen().cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * omega(v.rows() / 2).eigen().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  const double lmin = solver.eigenvalues()(0);
  return {lmin >= -tol.bound(std::max(1.0, v.max_abs())), lmin};
}

BonaFideReport check_oracle(const MatrixValue& v, const Tolerance& tol) {
  const auto h = heisenberg_oracle(v, tol);
  return finish(Route::Oracle, {{"min_eig_V_plus_iOmega", h.min_eigenvalue,
                                 tol.bound(std::max(1.0, v.max_abs()))}});
}

BonaFideReport check_global(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  const auto inv = two_mode_invariants(v, tol);
  const double scale = determinant_scale(v);
  Margins margins{
      {"min_eig_V", min_eigenvalue(v), tol.bound(v.max_abs()), true},
      {"det_V_minus_1", inv.det_v - 1.0, tol.bound(std::max(scale, std::abs(inv.det_v)))},
      delta_margin(inv.det_v, inv.delta, scale, tol),
  };
  auto report = finish(Route::Global, std::move(margins));
  if (report.margins[0].passes()) {
    report.nu_minus = symplectic_spectrum_2mode(v, tol).nu_minus;
  }
  return report;
}

BonaFideReport check_local(const MatrixValue& v, const Tolerance& tol) {
  const auto bl = blocks(v, tol);
  const auto inv = two_mode_invariants(v, tol);
  const double ab = inv.det_a * inv.det_b;
  // Only meaningful when A, B > 0; the sqrt argument is clamped so the
  // margin stays finite otherwise (the block margins already fail then).
  const double lhs = 2.0 * std::sqrt(std::max(ab, 0.0)) + inv.det_c * inv.det_c;
  const double rhs = inv.det_v + ab;
  const double scale = determinant_scale(v);
  Margins margins{
      {"min_eig_A", min_eigenvalue(bl.a), tol.bound(bl.a.max_abs()), true},
      {"min_eig_B", min_eigenvalue(bl.b), tol.bound(bl.b.max_abs()), true},
      delta_margin(inv.det_v, inv.delta, scale, tol),
      {"block_condition", rhs - lhs,
       tol.bound(std::max({scale, std::abs(lhs), std::abs(inv.det_v) + std::abs(ab)}))},
  };
  return finish(Route::Local, std::move(margins));
}

StandardFormEigs standard_form_hermitian_eigs(double a, double b, double c_plus,
                                              double c_minus) {
  StandardFormEigs e;
  const double amb = a - b;
  const double cs = c_plus + c_minus;
  const double cd = c_plus - c_minus;
  e.mu_aux = 4.0 + amb * amb + 2.0 * (c_plus * c_plus + c_minus * c_minus);
  e.nu_aux = 4.0 * amb * amb + cs * cs * (4.0 + cd * cd);
  const double root_nu = std::sqrt(e.nu_aux);
  const double r_plus = std::sqrt(e.mu_aux + 2.0 * root_nu);
  // mu^2 >= 4 nu; roundoff can push the difference just below zero.
  const double r_minus = std::sqrt(std::max(0.0, e.mu_aux - 2.0 * root_nu));
  e.lambda_pp = 0.5 * (a + b + r_plus);
  e.lambda_mp = 0.5 * (a + b + r_minus);
  e.lambda_pm = 0.5 * (a + b - r_plus);
  e.lambda_mm = 0.5 * (a + b - r_minus);
  return e;
}

StandardFormEigs standard_form_hermitian_eigs(const StandardFormParams& p) {
  return standard_form_hermitian_eigs(p.a, p.b, p.c_plus, p.c_minus);
}

}  // namespace bonafide
