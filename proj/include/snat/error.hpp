// Copyright 2026 The snat Authors
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

#ifndef SNAT_ERROR_HPP
#define SNAT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snat {

enum class ErrorKind {
  Parse,
  InvalidArgument,
  UnsupportedProduct,
  NonCoprimeGenerators,
  SearchBudgetExceeded,
  NotSeparable,
  NotIncomparable,
  ConstructionStuck,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind maps one-to-one onto the
/// status codes of the C interface.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A malformed literal. `position` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse,
              "at offset " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace snat

#endif  // SNAT_ERROR_HPP
