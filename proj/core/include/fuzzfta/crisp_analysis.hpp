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

#ifndef FUZZFTA_CRISP_ANALYSIS_HPP
#define FUZZFTA_CRISP_ANALYSIS_HPP

#include "fuzzfta/fault_tree.hpp"

namespace fuzzfta {

/// Top event probability as the sum over all satisfying outcomes of their
/// full product probabilities. Exhaustive reference method, valid for any
/// DAG; limited by the cut set bound.
double unreliability_cutset(const FaultTree& tree, const Attribution& attribution,
                            std::size_t bound = kDefaultCutSetBound);

/// Linear-time gate folding: AND multiplies child probabilities, OR takes
/// one minus the product of child complements. Correct only when subtree
/// results are independent, so shared nodes are rejected with MethodError
/// (such models go through the bdd route).
double unreliability_bottom_up(const FaultTree& tree, const Attribution& attribution);

}  // namespace fuzzfta

#endif  // FUZZFTA_CRISP_ANALYSIS_HPP
