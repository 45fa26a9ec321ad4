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

#include "bonafide/families.hpp"

#include <cmath>
#include <random>
#include <string>

#include "bonafide/errors.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

namespace {

void require_params(const FamilySpec& spec, std::size_t lo, std::size_t hi) {
  const auto n = spec.params.size();
  if (n < lo || n > hi) {
    throw ParameterError("family " + std::string(to_string(spec.family)) + " takes " +
                         (lo == hi ? std::to_string(lo)
                                   : std::to_string(lo) + ".." + std::to_string(hi)) +
                         " parameter(s), got " + std::to_string(n));
  }
}

MatrixValue random_local(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> log_xi(-1.0, 1.0);
  auto single = [&] {
    const auto r1 = rotation(angle(rng));
    const auto sq = squeezer(std::exp(log_xi(rng)));
    const auto r2 = rotation(angle(rng));
    return r2 * sq * r1;
  };
  const auto s1 = single();
  const auto s2 = single();
  return direct_sum(s1, s2);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Vacuum: return "vacuum";
    case Family::Thermal: return "thermal";
    case Family::TwoModeSqueezed: return "two_mode_squeezed";
    case Family::SimonVx: return "simon_vx";
    case Family::RandomPhysical: return "random_physical";
    case Family::RandomSymmetric: return "random_symmetric";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::Vacuum, Family::Thermal, Family::TwoModeSqueezed, Family::SimonVx,
                   Family::RandomPhysical, Family::RandomSymmetric}) {
    if (to_string(f) == name) return f;
  }
  throw ParameterError("unknown family: " + std::string(name));
}

MatrixValue vacuum() { return MatrixValue::identity(4); }

MatrixValue thermal(double nu1, double nu2) {
  if (!(nu1 >= 1.0) || !(nu2 >= 1.0) || !std::isfinite(nu1) || !std::isfinite(nu2)) {
    throw ParameterError("thermal occupation must satisfy nu >= 1");
  }
  return MatrixValue::diagonal({nu1, nu1, nu2, nu2});
}

MatrixValue two_mode_squeezed(double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ParameterError("squeezing r must be >= 0");
  const double c = std::cosh(2.0 * r);
  const double s = std::sinh(2.0 * r);
  return MatrixValue{{c, 0, s, 0}, {0, c, 0, -s}, {s, 0, c, 0}, {0, -s, 0, c}};
}

MatrixValue simon_vx(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ParameterError("simon_vx needs x > 0");
  const double d = 0.5 * (1.0 + 4.0 * x);
  const double c1 = 0.5 * (4.0 * x - 1.0);
  const double c2 = -2.0 * x;
  return MatrixValue{{d, 0, c1, 0}, {0, d, 0, c2}, {c1, 0, d, 0}, {0, c2, 0, d}};
}

MatrixValue random_physical(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> occupation(1.0, 3.0);
  const double nu1 = occupation(rng);
  const double nu2 = occupation(rng);
  const auto l1 = random_local(rng);
  const auto l2 = random_local(rng);
  const auto l3 = random_local(rng);
  const auto bs = beam_splitter();
  const auto s = l3 * bs * l2 * bs * l1;
  return congruence(thermal(nu1, nu2), s);
}

MatrixValue random_symmetric(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  Eigen::MatrixXd m(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i) {
    for (Eigen::Index j = i; j < 4; ++j) {
      m(i, j) = m(j, i) = entry(rng);
    }
  }
  return MatrixValue(m);
}

MatrixValue generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Vacuum:
      require_params(spec, 0, 0);
      return vacuum();
    case Family::Thermal:
      require_params(spec, 1, 2);
      return thermal(spec.params[0], spec.params.size() == 2 ? spec.params[1] : spec.params[0]);
    case Family::TwoModeSqueezed:
      require_params(spec, 1, 1);
      return two_mode_squeezed(spec.params[0]);
    case Family::SimonVx:
      require_params(spec, 1, 1);
      return simon_vx(spec.params[0]);
    case Family::RandomPhysical:
      require_params(spec, 0, 0);
      return random_physical(spec.seed);
    case Family::RandomSymmetric:
      require_params(spec, 0, 0);
      return random_symmetric(spec.seed);
  }
  throw ParameterError("unknown family");
}

}  // namespace bonafide
