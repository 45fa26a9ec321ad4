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

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bonafide/cli/document.hpp"
#include "bonafide/families.hpp"
#include "bonafide/matrix.hpp"

namespace bonafide::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // I/O or numerical failure
  kUsage = 2,       // unparseable input, bad flags or parameters
  kShape = 3,       // wrong dimension or asymmetric matrix
  kPositivity = 4,  // positive definiteness required but absent
};

nlohmann::ordered_json classify_report(const MatrixDocument& doc, const Tolerance& tol);
nlohmann::ordered_json invariants_report(const MatrixDocument& doc, const Tolerance& tol);
nlohmann::ordered_json standard_form_report(const MatrixDocument& doc, const Tolerance& tol);
nlohmann::ordered_json williamson_report(const MatrixDocument& doc, const Tolerance& tol);
nlohmann::ordered_json generate_document(const FamilySpec& spec);

struct SweepRange {
  double from = 0;
  double to = 0;
  double step = 0;

  /// Points are from + i * step for i = 0, 1, ... while <= to (with a
  /// relative slack of 1e-9 steps so that decimal endpoints are included).
  std::vector<double> points() const;
};

inline constexpr const char* kSweepHeader =
    "x,det_V,delta,delta_tilde,nu_minus,nu_tilde_minus,heisenberg_margin,simon_margin,tag";

/// CSV with kSweepHeader. Only one-parameter families are sweepable;
/// thermal sweeps set both modes to x.
std::string sweep_csv(Family family, const SweepRange& range, const Tolerance& tol);

/// Human-readable rendering of a report produced above.
std::string render_text(const nlohmann::ordered_json& report);

/// Full command-line entry point; argv[0] is the program name.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bonafide::cli
