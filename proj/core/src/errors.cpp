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

#include "fuzzfta/errors.hpp"

#include <string>

namespace fuzzfta {

const char* category_name(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse:
      return "parse";
    case ErrorCategory::kValidation:
      return "validation";
    case ErrorCategory::kMethodIncompatible:
      return "dag-rejected";
    case ErrorCategory::kResourceBound:
      return "bound-exceeded";
  }
  return "unknown";
}

int category_exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse:
    case ErrorCategory::kValidation:
      return 2;
    case ErrorCategory::kMethodIncompatible:
      return 3;
    case ErrorCategory::kResourceBound:
      return 4;
  }
  return 1;
}

std::string ParseError::format(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  std::string out = "line " + std::to_string(line);
  if (column > 0) out += ", column " + std::to_string(column);
  out += ": " + message;
  return out;
}

}  // namespace fuzzfta
