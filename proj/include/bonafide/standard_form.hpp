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

#include "bonafide/matrix.hpp"

namespace bonafide {

/// Standard form [[a I, diag(c+, c-)], [diag(c+, c-), b I]] reached by the
/// local symplectic `s_local`.
///
/// Canonical cell: c_plus >= 0 and |c_plus| >= |c_minus|. Only the product
/// c_plus * c_minus = det C is invariant, the cell fixes the remaining
/// sign/order freedom.
struct StandardFormParams {
  double a = 0;
  double b = 0;
  double c_plus = 0;
  double c_minus = 0;
  /// Block-diagonal S_A (+) S_B with s_local V s_local^T = assemble().
  MatrixValue s_local = MatrixValue::identity(4);

  MatrixValue assemble() const;
};

struct SingleModeWilliamson {
  MatrixValue s;  ///< 2x2, det = 1, s A s^T = a I
  double a = 0;   ///< sqrt(det A)
};

/// For 2x2 A > 0 returns S = sqrt(a) A^{-1/2}, which is symmetric with
/// det S = 1 and S A S^T = a I. Throws NotPositiveDefinite.
SingleModeWilliamson single_mode_williamson(const MatrixValue& a, const Tolerance& tol = {});

/// Requires only the diagonal blocks to be positive definite; throws
/// BlockNotPositiveDefinite naming the failing block.
StandardFormParams reduce_to_standard_form(const MatrixValue& v, const Tolerance& tol = {});

}  // namespace bonafide
