// Copyright 2026 The invforge Authors
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

namespace invforge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient spaces (vector length, shape, bidegree).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured cap on ambient dimension or generated row count was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Exact evaluation was requested on data that only has a float form.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// Malformed argument: bad party index, incompatible shape, non-PSD input...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace invforge
