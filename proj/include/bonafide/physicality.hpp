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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bonafide/matrix.hpp"

namespace bonafide {

struct StandardFormParams;

/// A named real quantity that must be nonnegative for a condition to hold.
struct Margin {
  std::string name;
  double value = 0;
  /// Values in [-bound, +bound] are treated as zero.
  double bound = 0;
  /// Strict conditions (positive definiteness) need value > +bound; all
  /// others pass at value >= -bound.
  bool strict = false;

  bool passes() const noexcept { return strict ? value > bound : value >= -bound; }
  bool within_band(double widen = 1.0) const noexcept;
};

using Margins = std::vector<Margin>;

/// Looks up a margin by name; throws std::out_of_range if absent.
const Margin& find_margin(const Margins& margins, std::string_view name);

enum class Route { Oracle, Global, Local };

std::string_view to_string(Route route);

/// Outcome of a bona fide check. `verdict` is true iff every margin passes:
/// strict-positivity margins must exceed +bound, every other margin must be
/// at least -bound. `borderline` flags any margin inside its band.
struct BonaFideReport {
  bool verdict = false;
  Route route = Route::Oracle;
  Margins margins;
  bool borderline = false;
  /// Smallest symplectic eigenvalue; populated by the global route when V > 0.
  std::optional<double> nu_minus;
};

/// Smallest eigenvalue of a symmetric matrix.
double min_eigenvalue(const MatrixValue& m);

/// Strict: smallest eigenvalue > tol.bound(max|M|).
bool is_positive_definite(const MatrixValue& m, const Tolerance& tol = {});

struct HeisenbergResult {
  bool bona_fide = false;
  /// Smallest eigenvalue of the Hermitian matrix V + i Omega.
  double min_eigenvalue = 0;
};

/// Direct test of V + i Omega >= 0 for any 2n x 2n symmetric V.
HeisenbergResult heisenberg_oracle(const MatrixValue& v, const Tolerance& tol = {});

/// Same, as a report with the single margin "min_eig_V_plus_iOmega".
BonaFideReport check_oracle(const MatrixValue& v, const Tolerance& tol = {});

/// V > 0, det V >= 1, delta <= 1 + det V. Margins: "min_eig_V",
/// "det_V_minus_1", "one_plus_det_V_minus_delta".
BonaFideReport check_global(const MatrixValue& v, const Tolerance& tol = {});

/// A > 0, B > 0, delta <= 1 + det V and
/// 2 sqrt(det A det B) + det C^2 <= det V + det A det B, evaluated on the
/// original blocks. Margins: "min_eig_A", "min_eig_B",
/// "one_plus_det_V_minus_delta", "block_condition".
BonaFideReport check_local(const MatrixValue& v, const Tolerance& tol = {});

/// Closed-form eigenvalues of V_std + i Omega for a standard-form matrix.
struct StandardFormEigs {
  double lambda_pp = 0;  // (a + b + sqrt(mu + 2 sqrt(nu))) / 2
  double lambda_mp = 0;  // (a + b + sqrt(mu - 2 sqrt(nu))) / 2
  double lambda_pm = 0;  // (a + b - sqrt(mu + 2 sqrt(nu))) / 2, the minimum
  double lambda_mm = 0;  // (a + b - sqrt(mu - 2 sqrt(nu))) / 2
  double mu_aux = 0;     // 4 + (a - b)^2 + 2 (c+^2 + c-^2)
  double nu_aux = 0;     // 4 (a - b)^2 + (c+ + c-)^2 (4 + (c+ - c-)^2)

  double min() const noexcept { return lambda_pm; }
};

StandardFormEigs standard_form_hermitian_eigs(double a, double b, double c_plus,
                                              double c_minus);
StandardFormEigs standard_form_hermitian_eigs(const StandardFormParams& p);

}  // namespace bonafide
