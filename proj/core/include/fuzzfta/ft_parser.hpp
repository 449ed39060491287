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

#ifndef FUZZFTA_FT_PARSER_HPP
#define FUZZFTA_FT_PARSER_HPP

#include <string>

#include "fuzzfta/fault_tree.hpp"

namespace fuzzfta {

struct Model {
  std::string name;
  FaultTree tree;
  Attribution attribution;
};

/// Parses the .ft text format:
///
///   toplevel <id>;
///   <id> and|or <child> <child> ...;
///   <id> prob=<real>;
///   <id> tri=<a>,<b>,<d>;
///   <id> trap=<a>,<b>,<c>,<d>;
///   <id> gauss=<mean>,<dev>;
///   <id> discrete=<v>:<m>,<v>:<m>,...;
///   # comment to end of line
///
/// Identifiers match [A-Za-z0-9_.-]+. An id that never heads a gate line is a
/// basic event; every basic event must carry exactly one attribution. Children
/// may be referenced before their defining line. Throws ParseError with
/// line/column positions; structural problems surface as ValidationError.
Model parse_model(const std::string& text, const std::string& name = "model");

/// parse_model over the file contents; the model name is the file stem.
Model load_model(const std::string& path);

/// Canonical text: toplevel line, gates in depth-first preorder from the
/// root, then attributions in basic event definition order. Numbers are
/// printed with shortest round-trip precision, so parse(serialize(m))
/// reproduces m exactly.
std::string serialize_model(const Model& model);

}  // namespace fuzzfta

#endif  // FUZZFTA_FT_PARSER_HPP
