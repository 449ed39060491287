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

#ifndef FUZZFTA_FUZZY_ANALYSIS_HPP
#define FUZZFTA_FUZZY_ANALYSIS_HPP

#include <string>
#include <vector>

#include "fuzzfta/alpha_series.hpp"
#include "fuzzfta/bdd.hpp"
#include "fuzzfta/fault_tree.hpp"
#include "fuzzfta/ft_parser.hpp"
#include "fuzzfta/fuzzy_number.hpp"

namespace fuzzfta {

inline constexpr int kDefaultNCuts = 100;
inline constexpr std::size_t kDefaultSupportProductCap = 1'000'000;

/// Reference fuzzy unreliability for finite supports: enumerates every
/// combination of basic event support values, scores each with the cut set
/// sum, and keeps the best (max-min) membership per resulting value. Crisp
/// probabilities are treated as membership-1 singletons. Handles any DAG;
/// cost is the product of support sizes, guarded by support_product_cap.
DiscreteFuzzy fuzzy_unreliability_exact(const FaultTree& tree, const Attribution& attribution,
                                        std::size_t cutset_bound = kDefaultCutSetBound,
                                        std::size_t support_product_cap =
                                            kDefaultSupportProductCap);

/// Gate folding with extension-principle arithmetic over finite supports:
/// AND multiplies, OR complements/multiplies/complements. Agrees with the
/// exact enumeration on tree-structured models, where each basic event
/// feeds exactly one gate chain; shared nodes are rejected with MethodError
/// because the fold would treat correlated operands as independent.
DiscreteFuzzy fuzzy_unreliability_bu_discrete(const FaultTree& tree,
                                              const Attribution& attribution);

/// Gate folding row-wise over alpha-cut series for the continuous shapes
/// (crisp values become constant series). Every endpoint column equals the
/// crisp fold at the matching endpoint assignment. Tree-structured models
/// only; finite supports go through the discrete paths instead.
AlphaCutSeries fuzzy_unreliability_bu_alpha(const FaultTree& tree,
                                            const Attribution& attribution,
                                            int n_cuts = kDefaultNCuts);

struct CounterexampleReport {
  DiscreteFuzzy naive_bdd;
  DiscreteFuzzy exact;
  bool differ;
};

/// Evaluates the diagram with one extension-principle step per node,
/// (p, high, low) -> p*high + (1-p)*low, memoized per node, and compares
/// against the exact enumeration. The per-node step forgets that branch
/// values sharing a variable are correlated, so the two can disagree; the
/// report carries both results. Finite supports only.
CounterexampleReport fuzzy_bdd_counterexample(const FaultTree& tree,
                                              const Attribution& attribution,
                                              const std::vector<std::string>& order = {});

/// Smallest instance we know where the per-node diagram evaluation differs
/// from the exact result, paired with the variable order that exposes it.
Model counterexample_model();
std::vector<std::string> counterexample_order();

}  // namespace fuzzfta

#endif  // FUZZFTA_FUZZY_ANALYSIS_HPP
