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

#include <cstddef>
#include <span>
#include <vector>

#include "bonafide/matrix.hpp"

namespace bonafide {

inline constexpr std::size_t kMaxWilliamsonModes = 8;

/// Symmetric M with M V M = I. Throws NotPositiveDefinite.
MatrixValue inv_sqrt(const MatrixValue& v, const Tolerance& tol = {});

/// V^{-1/2} Omega V^{-1/2}, re-antisymmetrized.
MatrixValue build_x(const MatrixValue& v, const Tolerance& tol = {});

enum class BlockOrder { Ascending, Descending };

struct SkewBlockOptions {
  BlockOrder order = BlockOrder::Ascending;
  /// Optional phase per block, applied as u -> u e^{i phi} to the +i a
  /// eigenvector (and conjugately to its partner). Any choice yields a valid
  /// rotation. Empty means no extra phases.
  std::vector<double> phases;
};

struct SkewBlockForm {
  /// Proper rotation with O Xs O^T = (+)_k a_k [[0, 1], [-1, 0]].
  MatrixValue o;
  /// a_k > 0 in the requested order.
  std::vector<double> a;
};

/// Block-diagonalizes a nonsingular real antisymmetric matrix by unitary
/// diagonalization of i Xs and conjugate pairing of its eigenvectors.
///
/// Throws SingularInput if some a_k vanishes, PairingError if the spectrum
/// of i Xs is not symmetric about zero, and PreconditionViolated if the
/// Pfaffian of Xs is negative (no proper rotation reaches positive a_k then).
SkewBlockForm skew_block_rotation(const MatrixValue& xs, const Tolerance& tol = {},
                                  const SkewBlockOptions& options = {});

/// S V S^T = W with S symplectic.
struct WilliamsonDecomposition {
  MatrixValue w;  ///< diag(nu_1, nu_1, ..., nu_n, nu_n), ascending
  MatrixValue s;
  MatrixValue r;  ///< proper rotation, R X R^T = W^{-1/2} Omega W^{-1/2}
  MatrixValue x;  ///< V^{-1/2} Omega V^{-1/2}
  std::vector<double> spectrum;
  /// Two symplectic eigenvalues coincide within tolerance. The result is
  /// still valid; S is then unique only up to a larger orthosymplectic group.
  bool degenerate = false;
};

/// Six steps: spectrum, W^{1/2} and V^{-1/2}, X, eigenvectors of X,
/// R = Gamma U^dagger, S = W^{1/2} R V^{-1/2}.
///
/// V must be symmetric positive definite of dimension 2n with
/// n <= kMaxWilliamsonModes. `phases` (optional, one per mode) is forwarded
/// to skew_block_rotation.
WilliamsonDecomposition williamson_decompose(const MatrixValue& v, const Tolerance& tol = {},
                                             std::span<const double> phases = {});

}  // namespace bonafide
