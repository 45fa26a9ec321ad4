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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "bonafide/errors.hpp"
#include "bonafide/families.hpp"
#include "bonafide/invariants.hpp"
#include "bonafide/physicality.hpp"
#include "bonafide/separability.hpp"
#include "bonafide/symplectic.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace bonafide;
using Catch::Matchers::WithinAbs;

TEST_CASE("classify_global on named matrices", "[separability]") {
  CHECK(classify_global(MatrixValue::identity(4)).tag == Tag::SeparableGaussianCM);

  const auto tms = classify_global(two_mode_squeezed(0.5));
  CHECK(tms.tag == Tag::EntangledGaussianCM);
  REQUIRE(tms.nu_tilde_minus.has_value());
  CHECK_THAT(*tms.nu_tilde_minus, WithinAbs(std::exp(-1.0), 1e-12));
  // The partial transpose itself violates the uncertainty principle.
  CHECK_FALSE(heisenberg_oracle(partial_transpose(two_mode_squeezed(0.5))).bona_fide);

  const auto one = classify_global(simon_vx(1.0));
  CHECK(one.tag == Tag::EntangledGaussianCM);
  CHECK_THAT(find_margin(one.margins, "one_plus_det_V_minus_delta_tilde").value,
             WithinAbs(10.0 - 18.5, 1e-12));

  const auto tenth = classify_global(simon_vx(0.1));
  CHECK(tenth.tag == Tag::Unphysical);
  CHECK_FALSE(tenth.reason.empty());
}

TEST_CASE("classify_local on named matrices", "[separability]") {
  CHECK(classify_local(MatrixValue::identity(4)).tag == Tag::SeparableGaussianCM);
  CHECK(classify_local(two_mode_squeezed(0.5)).tag == Tag::EntangledGaussianCM);
  CHECK(classify_local(simon_vx(1.0)).tag == Tag::EntangledGaussianCM);
  CHECK(classify_local(simon_vx(0.1)).tag == Tag::Unphysical);

  // C = 0 with physical single-mode blocks is a product state.
  testing::Generator gen(6);
  for (int i = 0; i < 100; ++i) {
    const auto a = congruence(gen.uniform(1, 3) * MatrixValue::identity(2),
                              gen.single_mode_symplectic());
    const auto b = congruence(gen.uniform(1, 3) * MatrixValue::identity(2),
                              gen.single_mode_symplectic());
    const auto v = direct_sum(a, b);
    CHECK(classify_local(v).tag == Tag::SeparableGaussianCM);
    CHECK(classify_global(v).tag == Tag::SeparableGaussianCM);
  }
}

TEST_CASE("global and local classification agree", "[separability][property]") {
  testing::Generator gen(4242);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto v = gen.boundary_biased();
    const auto oracle = check_oracle(v);
    const auto g = classify_global(v);
    const auto l = classify_local(v);
    const bool near = oracle.margins[0].within_band(10.0) ||
                      find_margin(g.margins, "one_plus_det_V_minus_delta_tilde").within_band(10.0);
    if (near) continue;
    ++compared;
    INFO("sample " << i << "\n" << v.eigen());
    REQUIRE(g.tag == l.tag);
    // Independent PPT oracle: separable iff the partial transpose passes the
    // Hermitian test too.
    if (g.tag != Tag::Unphysical) {
      const bool pt_ok = heisenberg_oracle(partial_transpose(v)).bona_fide;
      REQUIRE((g.tag == Tag::SeparableGaussianCM) == pt_ok);
      // det V~ = det V >= 1 whenever the PPT stage is reached.
      REQUIRE(two_mode_invariants(partial_transpose(v)).det_v >= 1.0 - 1e-9);
    }
  }
  CHECK(compared > 9000);
}

TEST_CASE("PPT equivalence chain on bona fide CMs", "[separability][property]") {
  testing::Generator gen(55);
  for (int i = 0; i < 10000; ++i) {
    const auto v = i % 2 == 0 ? random_physical(gen.next_seed())
                              : gen.with_spectrum(gen.uniform(1.0, 1.5), gen.uniform(1.5, 6.0));
    const auto c = classify_global(v);
    REQUIRE(c.tag != Tag::Unphysical);
    const double nu_t = ppt_spectrum_2mode(v).nu_minus;
    REQUIRE(*c.nu_tilde_minus == symplectic_spectrum_2mode(partial_transpose(v)).nu_minus);
    const auto inv = two_mode_invariants(v);
    const double det_margin = 1.0 + inv.det_v - inv.delta_tilde;
    const double pt_margin = heisenberg_oracle(partial_transpose(v)).min_eigenvalue;
    if (std::abs(nu_t - 1.0) < 1e-8 || std::abs(det_margin) < 1e-7 || std::abs(pt_margin) < 1e-8) {
      continue;
    }
    REQUIRE((nu_t >= 1.0) == (det_margin >= 0.0));
    REQUIRE((nu_t >= 1.0) == (pt_margin >= 0.0));
  }
}

TEST_CASE("classification is mirror and local-symplectic invariant",
          "[separability][property]") {
  testing::Generator gen(808);
  for (int i = 0; i < 3000; ++i) {
    const auto v = gen.boundary_biased();
    const auto c = classify_global(v);
    const bool near = std::any_of(c.margins.begin(), c.margins.end(),
                                  [](const Margin& m) { return m.within_band(1e4); });
    if (near) continue;
    INFO(v.eigen());
    REQUIRE(classify_global(swap_modes(v)).tag == c.tag);
    REQUIRE(classify_local(swap_modes(v)).tag == c.tag);
    const auto moved = congruence(v, gen.local_symplectic(0.5));
    REQUIRE(classify_global(moved).tag == c.tag);
  }
}

TEST_CASE("simon_criterion", "[separability]") {
  CHECK(simon_criterion(MatrixValue::identity(4)));
  CHECK_FALSE(simon_criterion(simon_vx(0.5)));
  CHECK_FALSE(simon_criterion(two_mode_squeezed(0.3)));
  CHECK(simon_criterion(MatrixValue::diagonal({2.0, 2.0, 1.5, 1.5})));
  CHECK_THROWS_AS(simon_criterion(simon_vx(0.1)), PreconditionViolated);
  CHECK_THROWS_AS(simon_criterion(-1.0 * MatrixValue::identity(4)), PreconditionViolated);

  // On bona fide inputs it matches the PPT classification.
  testing::Generator gen(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = random_physical(gen.next_seed());
    const auto c = classify_global(v);
    if (find_margin(c.margins, "one_plus_det_V_minus_delta_tilde").within_band(10.0)) continue;
    REQUIRE(simon_criterion(v) == (c.tag == Tag::SeparableGaussianCM));
  }
}

TEST_CASE("simon_inequality_margin on the V(x) family", "[separability]") {
  // Left minus right equals 1/2 + x (8x - 5) here.
  for (double x = 0.01; x < 1.5; x += 0.01) {
    CHECK_THAT(simon_inequality_margin(simon_vx(x)), WithinAbs(0.5 + x * (8 * x - 5), 1e-12));
  }
  CHECK(simon_inequality_margin(simon_vx(0.125)) == 0.0);
}

TEST_CASE("posdef_criterion", "[separability]") {
  const auto p2 = posdef_criterion(simon_vx(0.2));
  CHECK(p2.tag == Tag::Unphysical);
  CHECK_THAT(find_margin(p2.margins, "det_V_minus_1").value, WithinAbs(0.52 - 1.0, 1e-12));

  CHECK(posdef_criterion(simon_vx(1.0)).tag == Tag::EntangledGaussianCM);
  CHECK(posdef_criterion(MatrixValue::identity(4)).tag == Tag::SeparableGaussianCM);
  CHECK_THROWS_AS(posdef_criterion(MatrixValue::diagonal({1.0, -1.0, 1.0, 1.0})),
                  NotPositiveDefinite);

  testing::Generator gen(90);
  int nonneg_c = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto v = gen.boundary_biased();
    if (!is_positive_definite(v)) continue;
    const auto g = classify_global(v);
    if (std::any_of(g.margins.begin(), g.margins.end(),
                    [](const Margin& m) { return m.within_band(10.0); })) {
      continue;
    }
    const auto p = posdef_criterion(v);
    INFO(v.eigen());
    REQUIRE(p.tag == g.tag);
    if (g.tag != Tag::Unphysical && two_mode_invariants(v).det_c >= 0.0) {
      ++nonneg_c;
      REQUIRE(p.tag == Tag::SeparableGaussianCM);
    }
  }
  CHECK(nonneg_c > 0);
}

TEST_CASE("tag names round-trip", "[separability]") {
  for (Tag t : {Tag::Unphysical, Tag::SeparableGaussianCM, Tag::EntangledGaussianCM}) {
    CHECK(tag_from_string(to_string(t)) == t);
  }
  CHECK_THROWS_AS(tag_from_string("Maybe"), ParameterError);
}
