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

#ifndef FUZZFTA_RUNNER_HPP
#define FUZZFTA_RUNNER_HPP

#include <string>
#include <vector>

#include "fuzzfta/bdd.hpp"
#include "fuzzfta/fault_tree.hpp"
#include "fuzzfta/ft_parser.hpp"
#include "fuzzfta/fuzzy_analysis.hpp"
#include "fuzzfta/result_io.hpp"

namespace fuzzfta {

struct RunOptions {
  std::string method = "bu";  // crisp runs: cutset | bu | bdd
  bool exact = false;         // fuzzy runs: force the exact enumeration
  std::string scheme;         // tri | trap | gauss | mix; empty keeps the attribution as-is
  std::string mix_map_path;   // required when scheme == "mix"
  int n_cuts = kDefaultNCuts;
  std::vector<std::string> order;  // bdd variable order; empty = default
  std::size_t node_cap = kDefaultBddNodeCap;
  std::size_t cutset_bound = kDefaultCutSetBound;
  std::size_t support_product_cap = kDefaultSupportProductCap;
  std::string json_out;  // write to_json here when non-empty
  std::string csv_out;   // write to_csv here when non-empty
};

/// Crisp unreliability by opt.method.
AnalysisResult run_crisp(const Model& model, const RunOptions& opt);

/// Fuzzy unreliability. An explicit scheme first widens an all-crisp
/// attribution. Routing: opt.exact selects the enumeration; otherwise finite
/// supports fold discretely and continuous shapes fold over alpha cuts.
AnalysisResult run_fuzzy(const Model& model, const RunOptions& opt);

/// Writes opt.json_out / opt.csv_out when set.
void write_outputs(const AnalysisResult& result, const RunOptions& opt);

/// One-line human-readable digest of a result.
std::string summary_line(const AnalysisResult& result);

/// Membership curves of the alpha-cut fold under each uniform scheme
/// (u_tri, u_trap, u_gauss), u_mix when a mix map is given, and the crisp
/// bottom-up value as a single-point "crisp" marker.
FigureBundle figure_bundle(const Model& model, const RunOptions& opt);

}  // namespace fuzzfta

#endif  // FUZZFTA_RUNNER_HPP
