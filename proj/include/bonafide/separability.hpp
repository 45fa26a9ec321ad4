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

#include "bonafide/matrix.hpp"
#include "bonafide/physicality.hpp"

namespace bonafide {

enum class Tag { Unphysical, SeparableGaussianCM, EntangledGaussianCM };

std::string_view to_string(Tag tag);
/// Inverse of to_string(Tag); throws ParameterError on unknown names.
Tag tag_from_string(std::string_view name);

/// Classification of a symmetric 4x4 matrix as the CM of a Gaussian state.
/// Statements are about Gaussian states with this CM only.
struct Classification {
  Tag tag = Tag::Unphysical;
  std::string reason;
  Route route = Route::Global;
  Margins margins;
  /// Present whenever V > 0 (global route only).
  std::optional<double> nu_minus;
  std::optional<double> nu_tilde_minus;
};

/// Determinant route (V > 0, det V >= 1, delta <= 1 + det V, then
/// delta_tilde vs 1 + det V) cross-checked against the spectrum route
/// (nu_minus, nu_tilde_minus vs 1). The tag comes from the determinant route;
/// InternalInconsistency is thrown if the routes disagree outside the
/// tolerance band.
Classification classify_global(const MatrixValue& v, const Tolerance& tol = {});

/// Block route: A, B > 0, delta <= 1 + det V, the block condition, then
/// delta_tilde vs 1 + det V. Never computes a spectrum.
Classification classify_local(const MatrixValue& v, const Tolerance& tol = {});

/// Separability test for a matrix already known to be a bona fide CM:
/// det A det B + (1 + det C)^2 - I4 >= det A + det B. Throws
/// PreconditionViolated when check_global rejects V; on unphysical input the
/// inequality says nothing.
bool simon_criterion(const MatrixValue& v, const Tolerance& tol = {});

/// Left side minus right side of
/// det A det B + (1 - det C)^2 - I4 >= det A + det B. Nonnegative on
/// every bona fide CM, but also on some unphysical matrices.
double simon_inequality_margin(const MatrixValue& v, const Tolerance& tol = {});

/// Classification restricted to positive-definite V, using only
/// det V >= 1 and the |det C| form of the inequality (separable) or
/// (1 + det C)^2 < det A + det B - det A det B + I4 <= (1 - det C)^2
/// (entangled). Throws NotPositiveDefinite.
Classification posdef_criterion(const MatrixValue& v, const Tolerance& tol = {});

}  // namespace bonafide
