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

#include "fuzzfta/fuzzify.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

const char* scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kTri:
      return "tri";
    case SchemeKind::kTrap:
      return "trap";
    case SchemeKind::kGauss:
      return "gauss";
    case SchemeKind::kMix:
      return "mix";
  }
  return "unknown";
}

SchemeKind scheme_kind_from_name(const std::string& name) {
  if (name == "tri") return SchemeKind::kTri;
  if (name == "trap") return SchemeKind::kTrap;
  if (name == "gauss") return SchemeKind::kGauss;
  if (name == "mix") return SchemeKind::kMix;
  throw ValidationError("unknown fuzzification scheme '" + name +
                        "' (expected tri, trap, gauss, or mix)");
}

FuzzyNumber fuzzify_value(double p, SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kTri:
      return Triangular(0.2 * p, p, 1.8 * p);
    case SchemeKind::kTrap:
      return Trapezoidal(0.2 * p, 0.9 * p, 1.1 * p, 1.8 * p);
    case SchemeKind::kGauss:
      if (p == 0.0) {
        throw ValidationError(
            "gaussian fuzzification of probability 0 would have zero deviation; "
            "use tri or trap for that event");
      }
      return Gaussian(p, 0.4 * p);
    case SchemeKind::kMix:
      break;
  }
  throw std::invalid_argument("fuzzify_value: a mix scheme needs a per-event kind");
}

Attribution fuzzify(const Attribution& crisp, const FuzzificationScheme& scheme,
                    const FaultTree& tree) {
  crisp.ensure_covers(tree);
  if (!crisp.all_crisp()) {
    throw ValidationError("fuzzification expects an all-crisp attribution");
  }
  if (scheme.kind == SchemeKind::kMix) {
    for (const auto& [id, kind] : scheme.mix) {
      const int idx = tree.index_of(id);
      if (idx < 0 || tree.node(idx).type != NodeType::kBasicEvent) {
        throw ValidationError("mix assignment for '" + id +
                              "', which is not a basic event of the tree");
      }
    }
  }
  Attribution out;
  for (int be : tree.basic_events()) {
    const std::string& id = tree.node(be).id;
    SchemeKind kind = scheme.kind;
    if (kind == SchemeKind::kMix) {
      auto it = scheme.mix.find(id);
      if (it == scheme.mix.end()) {
        throw ValidationError("mix scheme has no assignment for basic event '" + id + "'");
      }
      kind = it->second;
    }
    try {
      out.set_fuzzy(id, fuzzify_value(crisp.crisp(id), kind));
    } catch (const ValidationError& e) {
      throw ValidationError("fuzzifying '" + id + "': " + e.what());
    }
  }
  return out;
}

FuzzificationScheme parse_mix_map(const std::string& text) {
  FuzzificationScheme scheme;
  scheme.kind = SchemeKind::kMix;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string id, name, extra;
    if (!(fields >> id)) continue;  // blank line
    if (!(fields >> name) || (fields >> extra)) {
      throw ParseError("expected '<basic-event> tri|trap|gauss'", line_no);
    }
    SchemeKind kind;
    try {
      kind = scheme_kind_from_name(name);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (kind == SchemeKind::kMix) {
      throw ParseError("'mix' is not a per-event kind", line_no);
    }
    if (!scheme.mix.emplace(id, kind).second) {
      throw ParseError("duplicate assignment for '" + id + "'", line_no);
    }
  }
  if (scheme.mix.empty()) {
    throw ParseError("mix map has no assignments");
  }
  return scheme;
}

FuzzificationScheme load_mix_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mix_map(buf.str());
}

}  // namespace fuzzfta
