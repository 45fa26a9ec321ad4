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

#include "bonafide/symplectic.hpp"

#include <algorithm>
#include <cmath>

#include "bonafide/errors.hpp"

namespace bonafide {

namespace {

Eigen::MatrixXd omega_dense(Eigen::Index n_modes) {
  Eigen::MatrixXd o = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (Eigen::Index k = 0; k < n_modes; ++k) {
    o(2 * k, 2 * k + 1) = 1.0;
    o(2 * k + 1, 2 * k) = -1.0;
  }
  return o;
}

void require_square(const MatrixValue& m) {
  if (!m.is_square()) {
    throw DimensionError("expected a square matrix, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

}  // namespace

MatrixValue omega(std::size_t n_modes) {
  if (n_modes == 0) throw DimensionError("omega needs at least one mode");
  return MatrixValue(omega_dense(static_cast<Eigen::Index>(n_modes)));
}

bool is_symplectic(const MatrixValue& s, const Tolerance& tol) {
  require_square(s);
  if (s.rows() % 2 != 0) throw DimensionError("symplectic matrices have even dimension");
  const auto o = omega_dense(static_cast<Eigen::Index>(s.rows() / 2));
  const double residual =
      (s.eigen() * o * s.eigen().transpose() - o).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, s.max_abs() * s.max_abs());
  return residual <= tol.bound(scale);
}

MatrixValue congruence(const MatrixValue& v, const MatrixValue& s) {
  require_square(v);
  require_square(s);
  if (v.rows() != s.rows()) throw DimensionError("congruence shape mismatch");
  const Eigen::MatrixXd m = s.eigen() * v.eigen() * s.eigen().transpose();
  return MatrixValue(Eigen::MatrixXd(0.5 * (m + m.transpose())));
}

bool is_symmetric(const MatrixValue& m, const Tolerance& tol) {
  if (!m.is_square()) return false;
  const double asym = (m.eigen() - m.eigen().transpose()).cwiseAbs().maxCoeff();
  return asym <= tol.bound(m.max_abs());
}

void require_symmetric(const MatrixValue& m, const Tolerance& tol) {
  require_square(m);
  if (!is_symmetric(m, tol)) throw SymmetryError("matrix is not symmetric");
}

void require_two_mode(const MatrixValue& m, const Tolerance& tol) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw DimensionError("expected a 4x4 two-mode matrix, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
  require_symmetric(m, tol);
}

MatrixValue TwoModeBlocks::reassemble() const {
  Eigen::MatrixXd v(4, 4);
  v << a.eigen(), c.eigen(), c.eigen().transpose(), b.eigen();
  return MatrixValue(v);
}

TwoModeBlocks blocks(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  const auto& m = v.eigen();
  return {MatrixValue(Eigen::MatrixXd(m.block(0, 0, 2, 2))),
          MatrixValue(Eigen::MatrixXd(m.block(2, 2, 2, 2))),
          MatrixValue(Eigen::MatrixXd(m.block(0, 2, 2, 2)))};
}

MatrixValue partial_transpose(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  // Lambda V Lambda negates row 3 and column 3 (the diagonal entry twice).
  Eigen::MatrixXd m = v.eigen();
  m.row(3) *= -1.0;
  m.col(3) *= -1.0;
  return MatrixValue(m);
}

MatrixValue swap_modes(const MatrixValue& v, const Tolerance& tol) {
  const auto bl = blocks(v, tol);
  return TwoModeBlocks{bl.b, bl.a, bl.c.transpose()}.reassemble();
}

MatrixValue rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return MatrixValue{{c, -s}, {s, c}};
}

MatrixValue squeezer(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw ParameterError("squeezing parameter must be positive");
  }
  return MatrixValue::diagonal({std::sqrt(xi), 1.0 / std::sqrt(xi)});
}

MatrixValue direct_sum(const MatrixValue& a, const MatrixValue& b) {
  const auto ra = static_cast<Eigen::Index>(a.rows());
  const auto ca = static_cast<Eigen::Index>(a.cols());
  const auto rb = static_cast<Eigen::Index>(b.rows());
  const auto cb = static_cast<Eigen::Index>(b.cols());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(ra + rb, ca + cb);
  m.block(0, 0, ra, ca) = a.eigen();
  m.block(ra, ca, rb, cb) = b.eigen();
  return MatrixValue(m);
}

MatrixValue beam_splitter() {
  const double h = 1.0 / std::sqrt(2.0);
  return MatrixValue{{h, 0, h, 0}, {0, h, 0, h}, {-h, 0, h, 0}, {0, -h, 0, h}};
}

}  // namespace bonafide
