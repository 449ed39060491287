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

#include "fuzzfta/crisp_analysis.hpp"

#include <vector>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

double unreliability_cutset(const FaultTree& tree, const Attribution& attribution,
                            std::size_t bound) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  std::vector<double> prob;
  prob.reserve(tree.basic_event_count());
  for (int be : tree.basic_events()) prob.push_back(attribution.crisp(tree.node(be).id));

  double total = 0.0;
  for (const SafetyEvent& ev : cut_sets(tree, bound)) {
    double term = 1.0;
    for (std::size_t i = 0; i < prob.size(); ++i) {
      term *= ev.occurred(i) ? prob[i] : 1.0 - prob[i];
    }
    total += term;
  }
  return total;
}

namespace {

double fold_node(const FaultTree& tree, int v, const Attribution& attribution) {
  const FtNode& nd = tree.node(v);
  if (nd.type == NodeType::kBasicEvent) return attribution.crisp(nd.id);
  if (nd.type == NodeType::kAnd) {
    double acc = fold_node(tree, nd.children[0], attribution);
    for (std::size_t i = 1; i < nd.children.size(); ++i) {
      acc *= fold_node(tree, nd.children[i], attribution);
    }
    return acc;
  }
  double acc = 1.0 - fold_node(tree, nd.children[0], attribution);
  for (std::size_t i = 1; i < nd.children.size(); ++i) {
    acc *= 1.0 - fold_node(tree, nd.children[i], attribution);
  }
  return 1.0 - acc;
}

}  // namespace

double unreliability_bottom_up(const FaultTree& tree, const Attribution& attribution) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  if (!tree.is_tree_structured()) {
    std::string msg = "bottom-up unreliability assumes independent subtrees; shared nodes:";
    for (const std::string& id : shared_node_ids(tree)) msg += " '" + id + "'";
    msg += "; use the bdd method for this model";
    throw MethodError(msg);
  }
  return fold_node(tree, tree.root(), attribution);
}

}  // namespace fuzzfta
