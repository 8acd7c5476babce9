// Copyright 2026 The slmlab Authors
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

namespace slmlab {

/// Base class for every validation failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A scalar argument lies outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A matrix fails the density-matrix conditions (Hermitian, unit trace, PSD).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant was violated (e.g. an incomplete Kraus set).
class InvariantViolationError : public Error {
 public:
  using Error::Error;
};

/// A Choi state does not describe a trace-preserving channel.
class InvalidChannelError : public Error {
 public:
  using Error::Error;
};

/// Counts (or a matrix estimate) carry no usable signal.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// File read/write failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace slmlab
