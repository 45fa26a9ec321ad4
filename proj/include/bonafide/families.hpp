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

#include <cstdint>
#include <string_view>
#include <vector>

#include "bonafide/matrix.hpp"

namespace bonafide {

enum class Family {
  Vacuum,           ///< no parameters
  Thermal,          ///< nu (both modes) or nu1, nu2; each >= 1
  TwoModeSqueezed,  ///< r >= 0
  SimonVx,          ///< x > 0
  RandomPhysical,   ///< seed
  RandomSymmetric,  ///< seed
};

std::string_view to_string(Family family);
/// Accepts the names printed by to_string. Throws ParameterError.
Family family_from_string(std::string_view name);

struct FamilySpec {
  Family family = Family::Vacuum;
  std::vector<double> params;
  std::uint64_t seed = 0;
};

/// Builds a 4x4 member of the family. Throws ParameterError when the
/// parameters are outside the family's domain.
MatrixValue generate(const FamilySpec& spec);

MatrixValue vacuum();
MatrixValue thermal(double nu1, double nu2);
/// Standard form with a = b = cosh 2r, c+ = -c- = sinh 2r.
MatrixValue two_mode_squeezed(double r);
/// The one-parameter family
///   (1/2) [[1+4x, 0, 4x-1, 0], [0, 1+4x, 0, -4x],
///          [4x-1, 0, 1+4x, 0], [0, -4x, 0, 1+4x]],
/// positive definite for x > 0, physical for x >= 1/2, with det V >= 1 for
/// x >= (sqrt(33) - 1)/16, and satisfying the plain Simon inequality on
/// (0, 1/8] as well.
MatrixValue simon_vx(double x);

/// Random thermal state (nu_k uniform in [1, 3]) pushed through
///   L3 * BS * L2 * BS * L1
/// where each L is a random local symplectic (rotation, squeezer with
/// log xi uniform in [-1, 1], rotation, per mode) and BS is the fixed 50:50
/// beam splitter. Deterministic in `seed`.
MatrixValue random_physical(std::uint64_t seed);

/// Symmetric matrix with independent entries uniform in [-2, 2].
MatrixValue random_symmetric(std::uint64_t seed);

}  // namespace bonafide
