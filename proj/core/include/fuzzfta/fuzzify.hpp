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

#ifndef FUZZFTA_FUZZIFY_HPP
#define FUZZFTA_FUZZIFY_HPP

#include <map>
#include <string>

#include "fuzzfta/fault_tree.hpp"
#include "fuzzfta/fuzzy_number.hpp"

namespace fuzzfta {

/// Families for widening crisp point estimates into fuzzy numbers:
///   tri    p -> triangular (0.2p, p, 1.8p)
///   trap   p -> trapezoidal (0.2p, 0.9p, 1.1p, 1.8p)
///   gauss  p -> gaussian (mean p, dev 0.4p); rejects p = 0
///   mix    per basic event choice among the three
enum class SchemeKind { kTri, kTrap, kGauss, kMix };

const char* scheme_name(SchemeKind kind);
SchemeKind scheme_kind_from_name(const std::string& name);

struct FuzzificationScheme {
  SchemeKind kind = SchemeKind::kTri;
  std::map<std::string, SchemeKind> mix;  // consulted only when kind == kMix

  static FuzzificationScheme uniform(SchemeKind kind) { return {kind, {}}; }
};

/// Widens one probability; kind must not be kMix.
FuzzyNumber fuzzify_value(double p, SchemeKind kind);

/// Applies the scheme to an all-crisp attribution covering the tree. For a
/// mix scheme every basic event needs an assignment and stray assignments
/// are rejected.
Attribution fuzzify(const Attribution& crisp, const FuzzificationScheme& scheme,
                    const FaultTree& tree);

/// Mix assignment text: one "<basic-event-id> tri|trap|gauss" per line,
/// '#' comments. Returns a kMix scheme.
FuzzificationScheme parse_mix_map(const std::string& text);
FuzzificationScheme load_mix_map(const std::string& path);

}  // namespace fuzzfta

#endif  // FUZZFTA_FUZZIFY_HPP
