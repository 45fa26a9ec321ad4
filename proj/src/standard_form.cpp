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

#include "bonafide/standard_form.hpp"

#include <cmath>
#include <sstream>

#include "bonafide/errors.hpp"
#include "bonafide/physicality.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

namespace {

// Closed-form square root of a 2x2 SPD matrix:
// sqrt(A) = (A + sqrt(det A) I) / sqrt(tr A + 2 sqrt(det A)).
Eigen::Matrix2d sqrt_spd2(const Eigen::Matrix2d& a) {
  const double s = std::sqrt(a.determinant());
  const double t = std::sqrt(a.trace() + 2.0 * s);
  return (a + s * Eigen::Matrix2d::Identity()) / t;
}

Eigen::Matrix2d rot(double angle) {
  Eigen::Matrix2d r;
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

struct TwoAngles {
  double left = 0;   // applied to mode A
  double right = 0;  // applied to mode B
};

// Angles with R(left) M R(right)^T = diag(rho1 + rho2, rho1 - rho2).
//
// M splits into a rotation-like part rho1 R(phi1) and a reflection-like part
// rho2 R(phi2) diag(1, -1). Under the two-sided rotation the first picks up
// phase left - right and the second left + right, so both vanish for
// left = -(phi1 + phi2)/2, right = (phi1 - phi2)/2.
TwoAngles diagonalizing_angles(const Eigen::Matrix2d& m, double zero) {
  const double p = 0.5 * (m(0, 0) + m(1, 1));
  const double q = 0.5 * (m(1, 0) - m(0, 1));
  const double r = 0.5 * (m(0, 0) - m(1, 1));
  const double s = 0.5 * (m(0, 1) + m(1, 0));
  const double rho1 = std::hypot(p, q);
  const double rho2 = std::hypot(r, s);
  if (rho1 <= zero && rho2 <= zero) return {};
  const double phi1 = std::atan2(q, p);
  const double phi2 = std::atan2(s, r);
  if (rho2 <= zero) return {0.0, phi1};    // M ~ rotation
  if (rho1 <= zero) return {0.0, -phi2};   // M ~ reflection
  return {-0.5 * (phi1 + phi2), 0.5 * (phi1 - phi2)};
}

}  // namespace

MatrixValue StandardFormParams::assemble() const {
  return MatrixValue{{a, 0, c_plus, 0},
                     {0, a, 0, c_minus},
                     {c_plus, 0, b, 0},
                     {0, c_minus, 0, b}};
}

SingleModeWilliamson single_mode_williamson(const MatrixValue& a, const Tolerance& tol) {
  if (a.rows() != 2 || a.cols() != 2) throw DimensionError("expected a 2x2 block");
  require_symmetric(a, tol);
  const double lmin = min_eigenvalue(a);
  if (!(lmin > tol.bound(a.max_abs()))) {
    std::ostringstream os;
    os << "single-mode block is not positive definite (smallest eigenvalue " << lmin << ")";
    throw NotPositiveDefinite(os.str(), lmin);
  }
  const Eigen::Matrix2d am = 0.5 * (a.eigen() + a.eigen().transpose());
  const double nu = std::sqrt(am.determinant());
  const Eigen::Matrix2d s = std::sqrt(nu) * sqrt_spd2(am).inverse();
  return {MatrixValue(Eigen::MatrixXd(0.5 * (s + s.transpose()))), nu};
}

StandardFormParams reduce_to_standard_form(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  const Eigen::Matrix4d m = v.eigen();
  const Eigen::Matrix2d a = m.block<2, 2>(0, 0);
  const Eigen::Matrix2d b = m.block<2, 2>(2, 2);
  const Eigen::Matrix2d c = m.block<2, 2>(0, 2);

  for (const auto& [name, blk] : {std::pair{'A', a}, std::pair{'B', b}}) {
    const double lmin = min_eigenvalue(MatrixValue(Eigen::MatrixXd(blk)));
    if (!(lmin > tol.bound(blk.cwiseAbs().maxCoeff()))) {
      throw BlockNotPositiveDefinite(name, lmin);
    }
  }

  const auto wa = single_mode_williamson(MatrixValue(Eigen::MatrixXd(a)), tol);
  const auto wb = single_mode_williamson(MatrixValue(Eigen::MatrixXd(b)), tol);
  const Eigen::Matrix2d sa = wa.s.eigen();
  const Eigen::Matrix2d sb = wb.s.eigen();
  const Eigen::Matrix2d c1 = sa * c * sb.transpose();

  const auto angles = diagonalizing_angles(c1, tol.bound(c1.cwiseAbs().maxCoeff()));
  const Eigen::Matrix2d left = rot(angles.left) * sa;
  const Eigen::Matrix2d right = rot(angles.right) * sb;
  const Eigen::Matrix2d cd = rot(angles.left) * c1 * rot(angles.right).transpose();

  StandardFormParams p;
  p.a = wa.a;
  p.b = wb.a;
  p.c_plus = cd(0, 0);
  p.c_minus = cd(1, 1);
  // The closed-form angles land in the canonical cell; these guard the
  // degenerate branches and roundoff at |c+| == |c-|.
  Eigen::Matrix2d fix_a = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d fix_b = Eigen::Matrix2d::Identity();
  if (std::abs(p.c_minus) > std::abs(p.c_plus)) {
    // R(pi/2) on both modes maps diag(x, y) to diag(y, x) and keeps aI, bI.
    fix_a = rot(M_PI / 2) * fix_a;
    fix_b = rot(M_PI / 2) * fix_b;
    std::swap(p.c_plus, p.c_minus);
  }
  if (p.c_plus < 0.0) {
    // R(pi) on one mode negates C.
    fix_a = -fix_a;
    p.c_plus = -p.c_plus;
    p.c_minus = -p.c_minus;
  }

  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(4, 4);
  s.block(0, 0, 2, 2) = fix_a * left;
  s.block(2, 2, 2, 2) = fix_b * right;
  p.s_local = MatrixValue(s);
  return p;
}

}  // namespace bonafide
