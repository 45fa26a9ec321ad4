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

#include <stdexcept>
#include <string>

namespace bonafide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong shape: non-square, odd dimension, mismatched operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain (e.g. a negative squeezing).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// The operand failed a strict positive-definiteness check. Carries the
/// smallest eigenvalue that was found.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(const std::string& what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double min_eigenvalue_;
};

/// One of the diagonal blocks A or B of a two-mode matrix is not positive
/// definite. `block()` is 'A' or 'B'.
class BlockNotPositiveDefinite : public NotPositiveDefinite {
 public:
  BlockNotPositiveDefinite(char block, double min_eigenvalue)
      : NotPositiveDefinite(std::string("block ") + block +
                                " is not positive definite",
                            min_eigenvalue),
        block_(block) {}
  char block() const noexcept { return block_; }

 private:
  char block_;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues that must come in (+x, -x) or conjugate pairs did not.
class PairingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularInput : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside the domain where its statement is valid.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Two formulations that must agree did not. Always an implementation bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace bonafide
