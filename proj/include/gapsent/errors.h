// Copyright 2026 The Gapsent Authors.
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

#ifndef GAPSENT_ERRORS_H_
#define GAPSENT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gapsent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or argument values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A document with fewer than two sentences cannot be split into a
// non-empty input and a non-empty target.
class DegenerateDocumentError : public Error {
 public:
  using Error::Error;
};

// Input data that violates a command's preconditions (e.g. unaligned ids).
class InputError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace gapsent

#endif  // GAPSENT_ERRORS_H_
