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

#include "bonafide/matrix.hpp"

// Phase-space ordering throughout is (q1, p1, q2, p2, ...).

namespace bonafide {

/// Symplectic form for `n_modes` modes: direct sum of [[0, 1], [-1, 0]].
MatrixValue omega(std::size_t n_modes);

/// Whether S Omega S^T = Omega up to `tol` (scaled by max(1, max|S|^2)).
/// Throws DimensionError unless S is square with even dimension.
bool is_symplectic(const MatrixValue& s, const Tolerance& tol = {});

/// S V S^T, re-symmetrized. Throws DimensionError on shape mismatch.
MatrixValue congruence(const MatrixValue& v, const MatrixValue& s);

bool is_symmetric(const MatrixValue& m, const Tolerance& tol = {});

/// Throws DimensionError if `m` is not square, SymmetryError if it is not
/// symmetric within `tol`.
void require_symmetric(const MatrixValue& m, const Tolerance& tol = {});

/// Throws DimensionError unless `m` is 4x4, then checks symmetry.
void require_two_mode(const MatrixValue& m, const Tolerance& tol = {});

/// Block view [[A, C], [C^T, B]] of a two-mode matrix.
struct TwoModeBlocks {
  MatrixValue a;
  MatrixValue b;
  MatrixValue c;

  MatrixValue reassemble() const;
};

TwoModeBlocks blocks(const MatrixValue& v, const Tolerance& tol = {});

/// Local time reversal diag(1, 1, 1, -1) V diag(1, 1, 1, -1): flips the
/// momentum of the second mode.
MatrixValue partial_transpose(const MatrixValue& v, const Tolerance& tol = {});

/// Exchanges the two modes: A <-> B, C -> C^T.
MatrixValue swap_modes(const MatrixValue& v, const Tolerance& tol = {});

// Elementary single-mode symplectics and assembly helpers.

/// [[cos t, -sin t], [sin t, cos t]].
MatrixValue rotation(double angle);

/// diag(sqrt(xi), 1/sqrt(xi)); throws ParameterError unless xi > 0.
MatrixValue squeezer(double xi);

/// Block-diagonal [[a, 0], [0, b]].
MatrixValue direct_sum(const MatrixValue& a, const MatrixValue& b);

/// 50:50 beam splitter on two modes: [[I, I], [-I, I]] / sqrt(2).
/// Orthogonal and symplectic.
MatrixValue beam_splitter();

}  // namespace bonafide
