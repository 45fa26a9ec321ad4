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

#include "bonafide/separability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bonafide/errors.hpp"
#include "bonafide/invariants.hpp"
#include "bonafide/symplectic.hpp"

namespace bonafide {

namespace {

constexpr double kCrossCheckBand = 10.0;

double det_scale(const MatrixValue& v, const TwoModeInvariants& inv) {
  return std::max({determinant_scale(v), 1.0 + std::abs(inv.det_v), inv.gamma_sep});
}

Margin delta_tilde_margin(const MatrixValue& v, const TwoModeInvariants& inv,
                          const Tolerance& tol) {
  return {"one_plus_det_V_minus_delta_tilde", 1.0 + inv.det_v - inv.delta_tilde,
          tol.bound(det_scale(v, inv))};
}

// A clamped radicand leaves nu^2 uncertain by up to half the square root of
// its tolerance; widen the nu margin accordingly.
double nu_bound(const MatrixValue& v, const SymplecticSpectrum2& s, const Tolerance& tol) {
  double b = tol.bound(std::max(1.0, s.nu_plus));
  if (s.degenerate) b += 0.5 * std::sqrt(tol.bound(determinant_scale(v))) / s.nu_minus;
  return b;
}

// First failing margin of a bona fide report, for the reason text.
std::string failure_reason(const Margins& margins) {
  for (const auto& m : margins) {
    if (!m.passes()) {
      std::ostringstream os;
      os << "unphysical: " << m.name << " = " << m.value
         << (m.strict ? " (must be > " : " (must be >= ")
         << (m.strict ? m.bound : -m.bound) << ")";
      return os.str();
    }
  }
  return "unphysical";
}

Tag ppt_tag(const Margin& sep) {
  return sep.passes() ? Tag::SeparableGaussianCM : Tag::EntangledGaussianCM;
}

std::string ppt_reason(Tag tag) {
  return tag == Tag::SeparableGaussianCM
             ? "physical; partial transpose is physical (delta_tilde <= 1 + det V)"
             : "physical; partial transpose violates the uncertainty principle "
               "(delta_tilde > 1 + det V)";
}

}  // namespace

std::string_view to_string(Tag tag) {
  switch (tag) {
    case Tag::Unphysical: return "Unphysical";
    case Tag::SeparableGaussianCM: return "SeparableGaussianCM";
    case Tag::EntangledGaussianCM: return "EntangledGaussianCM";
  }
  return "Unknown";
}

Tag tag_from_string(std::string_view name) {
  for (Tag t : {Tag::Unphysical, Tag::SeparableGaussianCM, Tag::EntangledGaussianCM}) {
    if (to_string(t) == name) return t;
  }
  throw ParameterError("unknown classification tag: " + std::string(name));
}

Classification classify_global(const MatrixValue& v, const Tolerance& tol) {
  const auto inv = two_mode_invariants(v, tol);
  const auto bona = check_global(v, tol);

  Classification out;
  out.route = Route::Global;
  out.margins = bona.margins;
  const Margin sep = delta_tilde_margin(v, inv, tol);
  out.margins.push_back(sep);

  if (!bona.verdict) {
    out.tag = Tag::Unphysical;
    out.reason = failure_reason(bona.margins);
  } else {
    out.tag = ppt_tag(sep);
    out.reason = ppt_reason(out.tag);
  }

  // Spectrum route; needs V > 0 for the spectra to exist.
  const Margin& positivity = find_margin(bona.margins, "min_eig_V");
  if (!positivity.passes()) return out;

  const auto spec = symplectic_spectrum_2mode(v, tol);
  const auto spec_pt = symplectic_spectrum_2mode(partial_transpose(v, tol), tol);
  out.nu_minus = spec.nu_minus;
  out.nu_tilde_minus = spec_pt.nu_minus;
  const Margin nu_margin{"nu_minus_minus_1", spec.nu_minus - 1.0, nu_bound(v, spec, tol)};
  const Margin nu_tilde_margin{"nu_tilde_minus_minus_1", spec_pt.nu_minus - 1.0,
                               nu_bound(v, spec_pt, tol)};
  out.margins.push_back(nu_margin);
  out.margins.push_back(nu_tilde_margin);

  const Tag spectral_tag = !nu_margin.passes()         ? Tag::Unphysical
                           : nu_tilde_margin.passes() ? Tag::SeparableGaussianCM
                                                      : Tag::EntangledGaussianCM;
  if (spectral_tag != out.tag) {
    const bool near_boundary =
        std::any_of(out.margins.begin(), out.margins.end(),
                    [](const Margin& m) { return m.within_band(kCrossCheckBand); });
    if (!near_boundary) {
      throw InternalInconsistency("determinant route says " +
                                  std::string(to_string(out.tag)) +
                                  " but spectrum route says " +
                                  std::string(to_string(spectral_tag)));
    }
  }
  return out;
}

Classification classify_local(const MatrixValue& v, const Tolerance& tol) {
  const auto inv = two_mode_invariants(v, tol);
  const auto bona = check_local(v, tol);

  Classification out;
  out.route = Route::Local;
  out.margins = bona.margins;
  const Margin sep = delta_tilde_margin(v, inv, tol);
  out.margins.push_back(sep);
  if (!bona.verdict) {
    out.tag = Tag::Unphysical;
    out.reason = failure_reason(bona.margins);
  } else {
    out.tag = ppt_tag(sep);
    out.reason = ppt_reason(out.tag);
  }
  return out;
}

double simon_inequality_margin(const MatrixValue& v, const Tolerance& tol) {
  const auto inv = two_mode_invariants(v, tol);
  const double one_minus = 1.0 - inv.det_c;
  return inv.det_a * inv.det_b + one_minus * one_minus - inv.i4 - inv.det_a - inv.det_b;
}

bool simon_criterion(const MatrixValue& v, const Tolerance& tol) {
  const auto bona = check_global(v, tol);
  if (!bona.verdict) {
    throw PreconditionViolated(
        "separability criterion consulted on a matrix that is not a bona fide "
        "CM; " + failure_reason(bona.margins));
  }
  const auto inv = two_mode_invariants(v, tol);
  const double one_plus = 1.0 + inv.det_c;
  const double margin =
      inv.det_a * inv.det_b + one_plus * one_plus - inv.i4 - inv.det_a - inv.det_b;
  return margin >= -tol.bound(det_scale(v, inv));
}

Classification posdef_criterion(const MatrixValue& v, const Tolerance& tol) {
  require_two_mode(v, tol);
  const double lmin = min_eigenvalue(v);
  if (!(lmin > tol.bound(v.max_abs()))) {
    std::ostringstream os;
    os << "criterion applies to positive-definite matrices only (smallest eigenvalue "
       << lmin << ")";
    throw NotPositiveDefinite(os.str(), lmin);
  }
  const auto inv = two_mode_invariants(v, tol);
  const double band = tol.bound(det_scale(v, inv));
  const double ab = inv.det_a * inv.det_b;
  const double one_minus_abs = 1.0 - std::abs(inv.det_c);
  const double middle = inv.det_a + inv.det_b - ab + inv.i4;
  const double one_plus = 1.0 + inv.det_c;
  const double one_minus = 1.0 - inv.det_c;

  Classification out;
  out.route = Route::Global;
  out.margins = {
      {"det_V_minus_1", inv.det_v - 1.0,
       tol.bound(std::max(determinant_scale(v), std::abs(inv.det_v)))},
      {"separable_inequality", ab + one_minus_abs * one_minus_abs - inv.i4 - inv.det_a - inv.det_b,
       band},
      {"entangled_lower", middle - one_plus * one_plus, band, true},
      {"entangled_upper", one_minus * one_minus - middle, band},
  };
  const auto& m = out.margins;
  if (m[0].passes() && m[1].passes()) {
    out.tag = Tag::SeparableGaussianCM;
    out.reason = "det V >= 1 and the |det C| inequality holds";
  } else if (m[0].passes() && m[2].passes() && m[3].passes()) {
    out.tag = Tag::EntangledGaussianCM;
    out.reason = "det V >= 1 and (1 + det C)^2 < det A + det B - det A det B + I4 <= (1 - det C)^2";
  } else {
    out.tag = Tag::Unphysical;
    out.reason = m[0].passes() ? "unphysical: neither inequality branch holds"
                               : "unphysical: det V < 1";
  }
  return out;
}

}  // namespace bonafide
