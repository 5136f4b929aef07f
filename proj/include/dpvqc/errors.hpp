// Copyright 2026 The dpvqc Authors
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

#ifndef DPVQC_ERRORS_HPP_
#define DPVQC_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dpvqc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A length or count does not match what the operation requires.
class SizeError : public Error {
 public:
  using Error::Error;
};

// A qubit or element index is out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// An argument is invalid in a way not covered by the more specific errors.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Amplitudes handed to the simulator do not have unit norm.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Input that cannot be encoded, e.g. an all-zero amplitude vector.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Malformed IDX file. Carries the byte offset where parsing failed.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::uint64_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::uint64_t offset() const { return offset_; }

 private:
  std::uint64_t offset_;
};

// Invalid training configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dpvqc

#endif  // DPVQC_ERRORS_HPP_
