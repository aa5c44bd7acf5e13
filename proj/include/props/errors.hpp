// Copyright 2026 The propscpp Authors.
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

#ifndef PROPS_ERRORS_HPP_
#define PROPS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace props {

// Malformed input line (wrong column count, bad integer field, ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Well-formed input describing an invalid structure (cycle, dangling
// reference, multiple roots, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON input that does not conform to the graph schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal invariant breach during conversion.
class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace props

#endif  // PROPS_ERRORS_HPP_
