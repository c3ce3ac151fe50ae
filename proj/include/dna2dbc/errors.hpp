// Copyright 2026 The DNA2DBC Authors
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

#ifndef DNA2DBC_ERRORS_HPP
#define DNA2DBC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dna2dbc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text: FASTA documents, PBM images, hex strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A decoded codeword stream that is not a well-formed record stream.
class StreamError : public Error {
 public:
  using Error::Error;
};

// Payload or geometry too large for the symbology.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Argument outside its documented domain (codeword range, level, region).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Positioning pattern violation at a specific module.
class FrameError : public Error {
 public:
  FrameError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what), row_(row), col_(col) {}
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

// Correction codewords do not match the payload.
class VerifyError : public Error {
 public:
  using Error::Error;
};

// An erasure search would exceed its fill budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace dna2dbc

#endif  // DNA2DBC_ERRORS_HPP
