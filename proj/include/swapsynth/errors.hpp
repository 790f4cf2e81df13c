// Copyright 2026 The swapsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace swapsynth {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violated a documented precondition (non-unitary matrix, chamber
// violation, bad Bell-phase sum, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Unsupported matrix dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An iterative or factorisation step failed to meet its residual bound.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON or an unknown name in user input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace swapsynth
