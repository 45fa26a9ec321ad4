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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace bonafide {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense real matrix, row-major, with every element finite.
///
/// This is the value type of the public API: correlation matrices, blocks,
/// symplectic transformations and rotations are all carried as
/// MatrixValue. Construction rejects NaN and Inf, so no public operation
/// ever sees a non-finite input.
class MatrixValue {
 public:
  /// Throws DimensionError if `elements.size() != rows * cols` or a
  /// dimension is zero, ParameterError if an element is not finite.
  MatrixValue(std::size_t rows, std::size_t cols, std::vector<double> elements);

  /// From an Eigen expression. Same checks as above.
  explicit MatrixValue(const Eigen::Ref<const Eigen::MatrixXd>& m);

  /// Nested initializer, one list per row.
  MatrixValue(std::initializer_list<std::initializer_list<double>> rows);

  static MatrixValue identity(std::size_t n);
  static MatrixValue zeros(std::size_t rows, std::size_t cols);
  static MatrixValue diagonal(std::span<const double> entries);
  static MatrixValue diagonal(std::initializer_list<double> entries);

  std::size_t rows() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(m_.cols()); }
  bool is_square() const noexcept { return m_.rows() == m_.cols(); }

  double operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// Row-major view of the elements.
  std::span<const double> elements() const noexcept {
    return {m_.data(), static_cast<std::size_t>(m_.size())};
  }

  const RowMatrix& eigen() const noexcept { return m_; }

  MatrixValue transpose() const;
  /// Largest absolute element; the scale used for relative tolerances.
  double max_abs() const noexcept;

  friend bool operator==(const MatrixValue& a, const MatrixValue& b) {
    return a.m_.rows() == b.m_.rows() && a.m_.cols() == b.m_.cols() &&
           a.m_ == b.m_;
  }

 private:
  void validate() const;
  RowMatrix m_;
};

MatrixValue operator*(const MatrixValue& a, const MatrixValue& b);
MatrixValue operator+(const MatrixValue& a, const MatrixValue& b);
MatrixValue operator-(const MatrixValue& a, const MatrixValue& b);
MatrixValue operator*(double s, const MatrixValue& a);

/// max_ij |a_ij - b_ij|. Throws DimensionError on shape mismatch.
double max_abs_diff(const MatrixValue& a, const MatrixValue& b);

/// Absolute-plus-relative tolerance: a quantity of size `scale` is treated
/// as zero when its magnitude is at most abs + rel * scale.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  /// Throws ParameterError if either component is negative or non-finite.
  void validate() const;
  double bound(double scale) const noexcept;
};

}  // namespace bonafide
