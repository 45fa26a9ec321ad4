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

#include <vector>

#include "bonafide/matrix.hpp"

namespace bonafide {

/// Local and global symplectic invariants of a two-mode matrix
/// V = [[A, C], [C^T, B]].
struct TwoModeInvariants {
  double det_a = 0;
  double det_b = 0;
  double det_c = 0;
  double det_v = 0;
  /// Tr(A w C w B w C^T w), w = [[0, 1], [-1, 0]]. Computed from the trace,
  /// so det_v == det_a * det_b + det_c^2 - i4 is an independent identity.
  double i4 = 0;
  /// det A + det B + 2 det C
  double delta = 0;
  /// det A + det B - 2 det C, i.e. delta of the partial transpose.
  double delta_tilde = 0;
  /// det A + det B + 2 |det C| == max(delta, delta_tilde)
  double gamma_sep = 0;
};

/// Two-mode symplectic spectrum, nu_minus <= nu_plus.
struct SymplecticSpectrum2 {
  double nu_minus = 0;
  double nu_plus = 0;
  /// Delta^2 - 4 det V was within tolerance of zero and set to zero. The
  /// two values are then only resolved to about sqrt(tolerance) in nu^2.
  bool degenerate = false;
};

/// max(1, max|V|)^4: the size of the products summed in det V and every
/// other quartic invariant, hence the scale of their rounding error.
double determinant_scale(const MatrixValue& v);

/// Throws DimensionError / SymmetryError unless V is 4x4 symmetric. Works
/// for any signature.
TwoModeInvariants two_mode_invariants(const MatrixValue& v, const Tolerance& tol = {});

/// Closed-form spectrum from (delta, det V). Requires V > 0
/// (NotPositiveDefinite otherwise). A radicand delta^2 - 4 det V in
/// [-tol, 0) is clamped to zero; below that NumericalError is thrown.
SymplecticSpectrum2 symplectic_spectrum_2mode(const MatrixValue& v,
                                              const Tolerance& tol = {});

/// Spectrum of the partial transpose. Same code path as
/// symplectic_spectrum_2mode(partial_transpose(v)).
SymplecticSpectrum2 ppt_spectrum_2mode(const MatrixValue& v, const Tolerance& tol = {});

/// Symplectic eigenvalues of a 2n x 2n positive-definite V, ascending:
/// |eig(i Omega V)| with each +-nu pair collapsed. Throws
/// NotPositiveDefinite, or PairingError if the moduli do not pair up.
std::vector<double> symplectic_spectrum_general(const MatrixValue& v,
                                                const Tolerance& tol = {});

}  // namespace bonafide
