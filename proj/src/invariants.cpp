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

#include "bonafide/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bonafide/errors.hpp"
#include "bonafide/physicality.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

namespace {

void require_positive_definite(const MatrixValue& v, const Tolerance& tol) {
  const double lmin = min_eigenvalue(v);
  if (!(lmin > tol.bound(v.max_abs()))) {
    std::ostringstream os;
    os << "matrix is not positive definite (smallest eigenvalue " << lmin << ")";
    throw NotPositiveDefinite(os.str(), lmin);
  }
}

SymplecticSpectrum2 spectrum_from(double delta, double det_v, double scale,
                                  const Tolerance& tol) {
  double radicand = delta * delta - 4.0 * det_v;
  const double band = tol.bound(std::max({scale, delta * delta, 4.0 * std::abs(det_v)}));
  if (radicand < -band) {
    std::ostringstream os;
    os << "negative spectrum radicand " << radicand;
    throw NumericalError(os.str());
  }
  SymplecticSpectrum2 s;
  if (radicand <= band) {
    radicand = 0.0;
    s.degenerate = true;
  }
  // nu_plus^2 by the stable root, nu_minus^2 from the product det V.
  const double nu_plus_sq = 0.5 * (delta + std::sqrt(radicand));
  const double nu_minus_sq = det_v / nu_plus_sq;
  s.nu_minus = std::sqrt(nu_minus_sq);
  s.nu_plus = std::sqrt(nu_plus_sq);
  if (s.nu_minus > s.nu_plus) s.nu_minus = s.nu_plus;
  return s;
}

}  // namespace

double determinant_scale(const MatrixValue& v) {
  const double m = std::max(1.0, v.max_abs());
  return (m * m) * (m * m);
}

TwoModeInvariants two_mode_invariants(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  const Eigen::Matrix4d m = v.eigen();
  const Eigen::Matrix2d a = m.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = m.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = m.block<2, 2>(0, 2);
  Eigen::Matrix2d w;
  w << 0, 1, -1, 0;

  TwoModeInvariants inv;
  inv.det_a = a.determinant();
  inv.det_b = b.determinant();
  inv.det_c = c.determinant();
  inv.det_v = m.determinant();
  inv.i4 = (a * w * c * w * b * w * c.transpose() * w).trace();
  inv.delta = inv.det_a + inv.det_b + 2.0 * inv.det_c;
  inv.delta_tilde = inv.det_a + inv.det_b - 2.0 * inv.det_c;
  inv.gamma_sep = inv.det_a + inv.det_b + 2.0 * std::abs(inv.det_c);
  return inv;
}

SymplecticSpectrum2 symplectic_spectrum_2mode(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  require_positive_definite(v, tol);
  const auto inv = two_mode_invariants(v, tol);
  return spectrum_from(inv.delta, inv.det_v, determinant_scale(v), tol);
}

SymplecticSpectrum2 ppt_spectrum_2mode(const MatrixValue& v, const Tolerance& tol) {
  return symplectic_spectrum_2mode(partial_transpose(v, tol), tol);
}

std::vector<double> symplectic_spectrum_general(const MatrixValue& v, const Tolerance& tol) {
  require_symmetric(v, tol);
  if (v.rows() % 2 != 0) throw DimensionError("symplectic spectrum needs even dimension");
  require_positive_definite(v, tol);

  const std::size_t n = v.rows() / 2;
  // i Omega V has eigenvalues +-nu_k; Omega V has +-i nu_k, same moduli.
  const Eigen::MatrixXd ov = omega(n).eigen() * v.eigen();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(ov, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver failed on Omega V");

  std::vector<double> moduli;
  moduli.reserve(2 * n);
  for (const auto& z : solver.eigenvalues()) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end());

  std::vector<double> nus;
  nus.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = moduli[2 * k];
    const double hi = moduli[2 * k + 1];
    if (hi - lo > tol.bound(hi)) {
      std::ostringstream os;
      os << "symplectic eigenvalues failed to pair: " << lo << " vs " << hi;
      throw PairingError(os.str());
    }
    nus.push_back(0.5 * (lo + hi));
  }
  return nus;
}

}  // namespace bonafide
