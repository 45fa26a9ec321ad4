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

#include "bonafide/matrix.hpp"

#include <cmath>
#include <string>

#include "bonafide/errors.hpp"

namespace bonafide {

MatrixValue::MatrixValue(std::size_t rows, std::size_t cols,
                         std::vector<double> elements) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  if (elements.size() != rows * cols) {
    throw DimensionError("expected " + std::to_string(rows * cols) +
                         " elements, got " + std::to_string(elements.size()));
  }
  m_ = Eigen::Map<const RowMatrix>(elements.data(),
                                   static_cast<Eigen::Index>(rows),
                                   static_cast<Eigen::Index>(cols));
  validate();
}

MatrixValue::MatrixValue(const Eigen::Ref<const Eigen::MatrixXd>& m) : m_(m) {
  if (m_.rows() == 0 || m_.cols() == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
  validate();
}

MatrixValue::MatrixValue(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = rows.size();
  const auto m = n == 0 ? 0 : rows.begin()->size();
  if (n == 0 || m == 0) throw DimensionError("matrix dimensions must be positive");
  m_.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    if (row.size() != m) throw DimensionError("ragged matrix rows");
    Eigen::Index c = 0;
    for (double v : row) m_(r, c++) = v;
    ++r;
  }
  validate();
}

MatrixValue MatrixValue::identity(std::size_t n) {
  return MatrixValue(Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(n)));
}

MatrixValue MatrixValue::zeros(std::size_t rows, std::size_t cols) {
  return MatrixValue(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                           static_cast<Eigen::Index>(cols)));
}

MatrixValue MatrixValue::diagonal(std::span<const double> entries) {
  Eigen::VectorXd d(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) d(static_cast<Eigen::Index>(i)) = entries[i];
  return MatrixValue(Eigen::MatrixXd(d.asDiagonal()));
}

MatrixValue MatrixValue::diagonal(std::initializer_list<double> entries) {
  return diagonal(std::span<const double>(entries.begin(), entries.size()));
}

MatrixValue MatrixValue::transpose() const {
  return MatrixValue(Eigen::MatrixXd(m_.transpose()));
}

double MatrixValue::max_abs() const noexcept { return m_.cwiseAbs().maxCoeff(); }

void MatrixValue::validate() const {
  if (!m_.allFinite()) throw ParameterError("matrix has non-finite elements");
}

MatrixValue operator*(const MatrixValue& a, const MatrixValue& b) {
  if (a.cols() != b.rows()) throw DimensionError("product shape mismatch");
  return MatrixValue(Eigen::MatrixXd(a.eigen() * b.eigen()));
}

MatrixValue operator+(const MatrixValue& a, const MatrixValue& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("sum shape mismatch");
  }
  return MatrixValue(Eigen::MatrixXd(a.eigen() + b.eigen()));
}

MatrixValue operator-(const MatrixValue& a, const MatrixValue& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("difference shape mismatch");
  }
  return MatrixValue(Eigen::MatrixXd(a.eigen() - b.eigen()));
}

MatrixValue operator*(double s, const MatrixValue& a) {
  return MatrixValue(Eigen::MatrixXd(s * a.eigen()));
}

double max_abs_diff(const MatrixValue& a, const MatrixValue& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("shape mismatch");
  }
  return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

void Tolerance::validate() const {
  if (!(std::isfinite(rel) && rel >= 0.0) || !(std::isfinite(abs) && abs >= 0.0)) {
    throw ParameterError("tolerance components must be finite and nonnegative");
  }
}

double Tolerance::bound(double scale) const noexcept {
  return abs + rel * std::abs(scale);
}

}  // namespace bonafide
