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

#ifndef FUZZFTA_BDD_HPP
#define FUZZFTA_BDD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzfta/fault_tree.hpp"

namespace fuzzfta {

inline constexpr std::size_t kDefaultBddNodeCap = 1'000'000;

/// Reduced ordered binary decision diagram of a structure function.
/// Refs 0 and 1 are the false/true terminals; decision nodes follow in
/// bottom-up creation order, so nodes()[i].low/high < i always holds and a
/// single forward scan evaluates the diagram.
class Bdd {
 public:
  using Ref = std::uint32_t;
  static constexpr Ref kFalse = 0;
  static constexpr Ref kTrue = 1;

  struct Node {
    int var;  // level index into variable_order(); terminals use -1
    Ref low;
    Ref high;
  };

  Ref root() const { return root_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  static bool is_terminal(Ref r) { return r < 2; }

  /// Basic event ids by level; level 0 is tested first from the root.
  const std::vector<std::string>& variable_order() const { return order_; }

  /// Decision nodes only (terminals excluded).
  std::size_t node_count() const { return nodes_.size() - 2; }

 private:
  Bdd(std::vector<Node> nodes, Ref root, std::vector<std::string> order)
      : nodes_(std::move(nodes)), root_(root), order_(std::move(order)) {}

  std::vector<Node> nodes_;
  Ref root_;
  std::vector<std::string> order_;

  friend class BddBuilder;
};

/// Compiles the fault tree (tree or DAG) into a reduced ordered BDD.
/// An empty order selects the default: depth-first left-to-right order of
/// first basic event occurrence from the root. A non-empty order must be a
/// permutation of the basic event ids. Construction aborts with
/// ResourceError once the node table exceeds node_cap.
Bdd build_bdd(const FaultTree& tree, const std::vector<std::string>& order = {},
              std::size_t node_cap = kDefaultBddNodeCap);

/// Top event probability by Shannon expansion over the diagram; requires an
/// all-crisp attribution covering the variables.
double unreliability_bdd(const Bdd& bdd, const Attribution& attribution);

}  // namespace fuzzfta

#endif  // FUZZFTA_BDD_HPP
