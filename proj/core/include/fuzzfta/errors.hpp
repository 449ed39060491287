/*
 * Copyright 2026 The fuzzfta authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FUZZFTA_ERRORS_HPP
#define FUZZFTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fuzzfta {

/// Machine-readable failure categories. The CLI maps them to exit codes:
/// parse/validation -> 2, dag-rejected -> 3, bound-exceeded -> 4.
enum class ErrorCategory {
  kParse,
  kValidation,
  kMethodIncompatible,
  kResourceBound,
};

const char* category_name(ErrorCategory cat);
int category_exit_code(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

/// Syntax or semantic problem in an input file; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(ErrorCategory::kParse, format(msg, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& msg, int line, int column);
  int line_;
  int column_;
};

/// A model (or attribution) violates a structural invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg)
      : Error(ErrorCategory::kValidation, msg) {}
};

/// The requested analysis route does not apply to this input,
/// e.g. bottom-up fuzzy propagation on a DAG-shaped fault tree.
class MethodError : public Error {
 public:
  explicit MethodError(const std::string& msg)
      : Error(ErrorCategory::kMethodIncompatible, msg) {}
};

/// A configurable resource bound (enumeration size, BDD node cap) was hit.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg)
      : Error(ErrorCategory::kResourceBound, msg) {}
};

}  // namespace fuzzfta

#endif  // FUZZFTA_ERRORS_HPP
