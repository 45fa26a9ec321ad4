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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "bonafide/errors.hpp"
#include "bonafide/matrix.hpp"

namespace bonafide::cli {

/// Malformed input text: not JSON, not numeric rows, missing fields.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct MatrixDocument {
  MatrixValue matrix = MatrixValue::identity(4);
  std::optional<std::string> label;
  std::optional<Tolerance> tolerance;
};

/// Accepts either a JSON object {"matrix": [[...]], "label": ..., "tolerance":
/// {"rel": ..., "abs": ...}} (other keys are ignored, so reports re-parse),
/// a bare JSON array of rows, or whitespace-separated numeric rows.
/// The matrix must be square, of even dimension and symmetric within
/// `tol` (or the document's own tolerance when present).
MatrixDocument parse_document(std::string_view text, const Tolerance& tol = {});

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

nlohmann::ordered_json matrix_to_json(const MatrixValue& m);
nlohmann::ordered_json tolerance_to_json(const Tolerance& tol);

/// 17 significant digits; used for CSV.
std::string format_real(double x);

/// Shortest form that parses back to the same double.
std::string format_short(double x);

/// Whitespace-separated rows in shortest round-trip form, one row per line.
std::string matrix_to_text(const MatrixValue& m, std::string_view indent = "");

}  // namespace bonafide::cli
