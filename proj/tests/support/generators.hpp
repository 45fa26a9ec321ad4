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

// Random matrix generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "bonafide/families.hpp"
#include "bonafide/matrix.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide::testing {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  std::uint64_t next_seed() { return rng_(); }
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  MatrixValue single_mode_symplectic(double max_log_squeeze = 1.0) {
    return rotation(uniform(0, 2 * M_PI)) * squeezer(std::exp(uniform(-max_log_squeeze, max_log_squeeze))) *
           rotation(uniform(0, 2 * M_PI));
  }

  MatrixValue local_symplectic(double max_log_squeeze = 1.0) {
    return direct_sum(single_mode_symplectic(max_log_squeeze), single_mode_symplectic(max_log_squeeze));
  }

  MatrixValue global_symplectic(double max_log_squeeze = 1.0) {
    const auto bs = beam_splitter();
    return local_symplectic(max_log_squeeze) * bs * local_symplectic(max_log_squeeze) * bs *
           local_symplectic(max_log_squeeze);
  }

  /// n-mode symplectic: random single-mode factors interleaved with beam
  /// splitters on adjacent mode pairs.
  Eigen::MatrixXd symplectic(Eigen::Index n_modes, double max_log_squeeze = 0.7) {
    const Eigen::Index d = 2 * n_modes;
    Eigen::MatrixXd s = Eigen::MatrixXd::Identity(d, d);
    auto local = [&] {
      Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
      for (Eigen::Index k = 0; k < n_modes; ++k) {
        l.block(2 * k, 2 * k, 2, 2) = single_mode_symplectic(max_log_squeeze).eigen();
      }
      return l;
    };
    s = local();
    for (Eigen::Index k = 0; k + 1 < n_modes; ++k) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Identity(d, d);
      b.block(2 * k, 2 * k, 4, 4) = beam_splitter().eigen();
      s = local() * b * s;
    }
    return local() * s;
  }

  Eigen::MatrixXd proper_rotation(Eigen::Index d) {
    Eigen::MatrixXd g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) g(i, j) = normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    if (q.determinant() < 0) q.col(0) *= -1;
    return q;
  }

  /// Wishart-like SPD matrix G G^T / d + small ridge.
  Eigen::MatrixXd spd(Eigen::Index d) {
    Eigen::MatrixXd g(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) g(i, j) = normal();
    return g * g.transpose() / static_cast<double>(d) + 0.1 * Eigen::MatrixXd::Identity(d, d);
  }

  /// Random bona fide two-mode CM with the given smallest symplectic
  /// eigenvalue (> 0; physical iff >= 1).
  MatrixValue with_spectrum(double nu_minus, double nu_plus) {
    return congruence(MatrixValue::diagonal({nu_minus, nu_minus, nu_plus, nu_plus}),
                      global_symplectic());
  }

  /// Symmetric 4x4 drawn from a mixture biased toward every decision
  /// boundary of the bona fide and separability tests.
  MatrixValue boundary_biased() {
    const double eps_choices[] = {0.0, 1e-3, -1e-3, 1e-5, -1e-5, 1e-2, -1e-2, 0.1, -0.1};
    auto eps = [&] { return eps_choices[pick(9)]; };
    switch (pick(9)) {
      case 0:
        return random_symmetric(next_seed());
      case 1:
        return MatrixValue(spd(4));
      case 2:  // nu_minus near 1
        return with_spectrum(1.0 + eps(), uniform(1.0, 4.0));
      case 3: {  // squeezed thermal with nu_tilde_minus near 1 (entanglement edge)
        const double n = uniform(1.0, 3.0);
        const double r = 0.5 * std::log(n) + eps();
        const double a = n * std::cosh(2 * r);
        const double c = n * std::sinh(2 * r);
        const MatrixValue v{{a, 0, c, 0}, {0, a, 0, -c}, {c, 0, a, 0}, {0, -c, 0, a}};
        return congruence(v, local_symplectic());
      }
      case 4:  // Simon-inequality-satisfying but unphysical, and its neighbours
        return congruence(simon_vx(uniform(0.01, 0.7)), local_symplectic());
      case 5: {  // PD blocks, indefinite whole
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
        m.block(0, 0, 2, 2) = spd(2);
        m.block(2, 2, 2, 2) = spd(2);
        Eigen::Matrix2d c;
        c << normal(), normal(), normal(), normal();
        m.block(0, 2, 2, 2) = 2.0 * c;
        m.block(2, 0, 2, 2) = 2.0 * c.transpose();
        return MatrixValue(m);
      }
      case 6:  // negated physical CM: same squared spectrum, wrong sign
        return -1.0 * with_spectrum(uniform(1.0, 2.0), uniform(2.0, 4.0));
      case 7:  // positive definite with nu_minus < 1
        return with_spectrum(uniform(0.2, 1.0), uniform(1.0, 4.0));
      default:  // general physical
        return with_spectrum(uniform(1.0, 2.0), uniform(2.0, 5.0));
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bonafide::testing
