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

#include "bonafide/williamson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "bonafide/errors.hpp"
#include "bonafide/invariants.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

namespace {

using cd = std::complex<double>;

// Positive-definite eigendecomposition, or NotPositiveDefinite.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spd_eigen(const MatrixValue& v,
                                                         const Tolerance& tol) {
  require_symmetric(v, tol);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(v.eigen());
  if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
  const double lmin = solver.eigenvalues()(0);
  if (!(lmin > tol.bound(v.max_abs()))) {
    std::ostringstream os;
    os << "matrix is not positive definite (smallest eigenvalue " << lmin << ")";
    throw NotPositiveDefinite(os.str(), lmin);
  }
  return solver;
}

}  // namespace

MatrixValue inv_sqrt(const MatrixValue& v, const Tolerance& tol) {
  const auto solver = spd_eigen(v, tol);
  const Eigen::MatrixXd& q = solver.eigenvectors();
  const Eigen::VectorXd d = solver.eigenvalues().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd m = q * d.asDiagonal() * q.transpose();
  return MatrixValue(Eigen::MatrixXd(0.5 * (m + m.transpose())));
}

MatrixValue build_x(const MatrixValue& v, const Tolerance& tol) {
  if (v.rows() % 2 != 0) throw DimensionError("X needs an even-dimensional matrix");
  const auto m = inv_sqrt(v, tol);
  const Eigen::MatrixXd x = m.eigen() * omega(v.rows() / 2).eigen() * m.eigen();
  return MatrixValue(Eigen::MatrixXd(0.5 * (x - x.transpose())));
}

SkewBlockForm skew_block_rotation(const MatrixValue& xs, const Tolerance& tol,
                                  const SkewBlockOptions& options) {
  if (!xs.is_square() || xs.rows() % 2 != 0) {
    throw DimensionError("skew block form needs a square matrix of even dimension");
  }
  const auto dim = static_cast<Eigen::Index>(xs.rows());
  const Eigen::Index n = dim / 2;
  const double scale = xs.max_abs();
  if ((xs.eigen() + xs.eigen().transpose()).cwiseAbs().maxCoeff() > tol.bound(scale)) {
    throw SymmetryError("matrix is not antisymmetric");
  }
  if (!options.phases.empty() && options.phases.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("expected one phase per block");
  }

  // i Xs is Hermitian. An eigenvector with eigenvalue -a satisfies
  // Xs u = +i a u; its conjugate is the -i a partner.
  const Eigen::MatrixXcd h = cd(0.0, 1.0) * xs.eigen().cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  const Eigen::VectorXd& lambda = solver.eigenvalues();

  for (Eigen::Index k = 0; k < n; ++k) {
    const double neg = lambda(k);
    const double pos = lambda(dim - 1 - k);
    if (std::abs(neg + pos) > tol.bound(std::max(std::abs(neg), std::abs(pos)))) {
      std::ostringstream os;
      os << "eigenvalues of i X do not pair: " << neg << " vs " << pos;
      throw PairingError(os.str());
    }
    if (!(-neg > tol.bound(scale))) {
      throw SingularInput("antisymmetric matrix is singular (block value " +
                          std::to_string(-neg) + ")");
    }
  }

  // Negative eigenvalues come out ascending, i.e. a_k descending.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    order[static_cast<std::size_t>(k)] =
        options.order == BlockOrder::Descending ? k : n - 1 - k;
  }

  Eigen::MatrixXcd u(dim, n);
  SkewBlockForm out{MatrixValue::identity(static_cast<std::size_t>(dim)), {}};
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    u.col(k) = solver.eigenvectors().col(src);
    if (!options.phases.empty()) {
      u.col(k) *= std::polar(1.0, options.phases[static_cast<std::size_t>(k)]);
    }
    out.a.push_back(-lambda(src));
  }
  // Re-orthonormalize the +i a vectors (matters inside degenerate
  // eigenspaces); the -i a partners are their conjugates by construction.
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index j = 0; j < k; ++j) {
      u.col(k) -= u.col(j).dot(u.col(k)) * u.col(j);
    }
    u.col(k).normalize();
  }

  // Rows of Gamma U^dagger for block k: -sqrt2 Im(u_k)^T and sqrt2 Re(u_k)^T.
  Eigen::MatrixXd o(dim, dim);
  const double r2 = std::sqrt(2.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    o.row(2 * k) = -r2 * u.col(k).imag().transpose();
    o.row(2 * k + 1) = r2 * u.col(k).real().transpose();
  }

  const double ortho =
      (o * o.transpose() - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (ortho > tol.bound(1.0) * 1e3) {
    throw NumericalError("block rotation is not orthogonal (residual " +
                         std::to_string(ortho) + ")");
  }
  if (o.determinant() < 0.0) {
    throw PreconditionViolated(
        "antisymmetric matrix has negative Pfaffian; no proper rotation exists");
  }
  out.o = MatrixValue(o);
  return out;
}

WilliamsonDecomposition williamson_decompose(const MatrixValue& v, const Tolerance& tol,
                                             std::span<const double> phases) {
  require_symmetric(v, tol);
  if (v.rows() % 2 != 0) throw DimensionError("Williamson form needs even dimension");
  const std::size_t n = v.rows() / 2;
  if (n > kMaxWilliamsonModes) {
    throw DimensionError("Williamson decomposition supports at most " +
                         std::to_string(kMaxWilliamsonModes) + " modes");
  }
  const auto dim = static_cast<Eigen::Index>(2 * n);

  // Step 1: symplectic spectrum, ascending.
  const auto nus = symplectic_spectrum_general(v, tol);

  // Step 2: W^{1/2} and V^{-1/2}.
  Eigen::VectorXd w_diag(dim);
  for (std::size_t k = 0; k < n; ++k) {
    w_diag(static_cast<Eigen::Index>(2 * k)) = nus[k];
    w_diag(static_cast<Eigen::Index>(2 * k + 1)) = nus[k];
  }
  const auto v_inv_half = inv_sqrt(v, tol);

  // Step 3.
  const auto x = build_x(v, tol);

  // Steps 4 and 5: R X R^T = (+)_k nu_k^{-1} w. Ascending nu means
  // descending block values of X.
  SkewBlockOptions opts;
  opts.order = BlockOrder::Descending;
  opts.phases.assign(phases.begin(), phases.end());
  const auto form = skew_block_rotation(x, tol, opts);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(nus[k] * form.a[k] - 1.0) > 1e3 * tol.bound(1.0)) {
      std::ostringstream os;
      os << "symplectic eigenvalue " << nus[k] << " does not match block value 1/"
         << 1.0 / form.a[k];
      throw NumericalError(os.str());
    }
  }

  // Step 6.
  const Eigen::MatrixXd s =
      w_diag.cwiseSqrt().asDiagonal() * form.o.eigen() * v_inv_half.eigen();

  WilliamsonDecomposition out{MatrixValue(Eigen::MatrixXd(w_diag.asDiagonal())),
                              MatrixValue(s), form.o, x, nus, false};
  for (std::size_t k = 1; k < n; ++k) {
    if (nus[k] - nus[k - 1] <= tol.bound(nus[k])) out.degenerate = true;
  }
  return out;
}

}  // namespace bonafide
