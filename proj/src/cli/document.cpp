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

#include "bonafide/cli/document.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "bonafide/symplectic.hpp"

namespace bonafide::cli {

namespace {

MatrixValue rows_to_matrix(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ParseError("matrix has no rows");
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw DimensionError("matrix is not square: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(n));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  if (n % 2 != 0) {
    throw DimensionError("matrix dimension " + std::to_string(n) + " is odd");
  }
  return MatrixValue(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), flat);
}

std::vector<std::vector<double>> json_rows(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("\"matrix\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = j[r];
    if (!row.is_array()) throw ParseError("row " + std::to_string(r) + " is not an array");
    std::vector<double> values;
    for (const auto& x : row) {
      if (!x.is_number()) {
        throw ParseError("row " + std::to_string(r) + " holds a non-numeric entry " + x.dump());
      }
      values.push_back(x.get<double>());
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

std::vector<std::vector<double>> text_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<double> values;
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      double x = 0;
      try {
        x = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + token + "'");
      }
      values.push_back(x);
    }
    if (!values.empty()) rows.push_back(std::move(values));
  }
  return rows;
}

Tolerance json_tolerance(const nlohmann::json& j, Tolerance base) {
  if (!j.is_object()) throw ParseError("\"tolerance\" must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number()) throw ParseError("tolerance." + key + " must be a number");
    if (key == "rel") {
      base.rel = value.get<double>();
    } else if (key == "abs") {
      base.abs = value.get<double>();
    } else {
      throw ParseError("unknown tolerance field '" + key + "'");
    }
  }
  try {
    base.validate();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return base;
}

}  // namespace

MatrixDocument parse_document(std::string_view text, const Tolerance& tol) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first == text.size()) throw ParseError("empty input");

  MatrixDocument doc;
  std::vector<std::vector<double>> rows;
  if (text[first] == '{' || text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) {
      rows = json_rows(j);
    } else {
      if (!j.contains("matrix")) throw ParseError("document has no \"matrix\" field");
      rows = json_rows(j["matrix"]);
      if (j.contains("label")) {
        if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
        doc.label = j["label"].get<std::string>();
      }
      if (j.contains("tolerance")) doc.tolerance = json_tolerance(j["tolerance"], tol);
    }
  } else {
    rows = text_rows(text);
  }

  try {
    doc.matrix = rows_to_matrix(rows);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());  // non-finite entries
  }
  require_symmetric(doc.matrix, doc.tolerance.value_or(tol));
  return doc;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("error writing " + path.string());
}

nlohmann::ordered_json matrix_to_json(const MatrixValue& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json tolerance_to_json(const Tolerance& tol) {
  return {{"rel", tol.rel}, {"abs", tol.abs}};
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

std::string format_short(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x + 0.0);
  return std::string(buf, res.ptr);
}

std::string matrix_to_text(const MatrixValue& m, std::string_view indent) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += indent;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += format_short(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace bonafide::cli
