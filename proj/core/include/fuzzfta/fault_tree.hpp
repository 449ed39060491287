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

#ifndef FUZZFTA_FAULT_TREE_HPP
#define FUZZFTA_FAULT_TREE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "fuzzfta/fuzzy_number.hpp"

namespace fuzzfta {

enum class NodeType { kBasicEvent, kAnd, kOr };

const char* node_type_name(NodeType type);

struct FtNode {
  std::string id;
  NodeType type = NodeType::kBasicEvent;
  std::vector<int> children;  // indices into FaultTree::nodes()
};

/// Rooted DAG of AND/OR gates over basic events. Leaves are exactly the
/// basic events; sharing a node under several gates is allowed (that makes
/// the model a DAG rather than a tree, which some analyses reject).
class FaultTree {
 public:
  FaultTree() = default;

  /// Assembles without validation so malformed shapes can be probed in tests.
  static FaultTree from_parts(std::vector<FtNode> nodes, int root);

  const std::vector<FtNode>& nodes() const { return nodes_; }
  const FtNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  int root() const { return root_; }

  /// Index of the node with this id, or -1.
  int index_of(const std::string& id) const;

  /// Basic event node indices in definition order.
  const std::vector<int>& basic_events() const { return basic_events_; }
  std::size_t basic_event_count() const { return basic_events_.size(); }

  /// Structural diagnostics; empty means the model is well formed.
  std::vector<std::string> validate() const;

  /// Throws ValidationError carrying all diagnostics.
  void ensure_valid() const;

  /// True when every node other than the root is referenced exactly once.
  bool is_tree_structured() const;

 private:
  void reindex();

  std::vector<FtNode> nodes_;
  int root_ = -1;
  std::unordered_map<std::string, int> index_;
  std::vector<int> basic_events_;

  friend class FaultTreeBuilder;
};

/// Incremental construction with forward references: gates may name children
/// that are declared later. build() resolves names and validates.
class FaultTreeBuilder {
 public:
  FaultTreeBuilder& basic_event(const std::string& id);
  FaultTreeBuilder& gate(const std::string& id, NodeType type,
                         const std::vector<std::string>& children);
  FaultTreeBuilder& root(const std::string& id);
  FaultTree build() const;

 private:
  struct Decl {
    std::string id;
    NodeType type;
    std::vector<std::string> children;
  };
  std::vector<Decl> decls_;
  std::unordered_map<std::string, std::size_t> declared_;
  std::string root_id_;
};

/// Outcome vector over the basic events in definition order; bit i tells
/// whether basic event i occurred.
class SafetyEvent {
 public:
  explicit SafetyEvent(std::size_t n_events) : bits_(n_events, 0) {}

  /// Parses e.g. "101"; index 0 is the first basic event.
  static SafetyEvent from_string(const std::string& bits);

  /// Mask bit i (least significant first) becomes event i.
  static SafetyEvent from_mask(std::uint64_t mask, std::size_t n_events);

  std::size_t size() const { return bits_.size(); }
  bool occurred(std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  std::string to_string() const;

  bool operator==(const SafetyEvent& other) const { return bits_ == other.bits_; }
  bool operator<(const SafetyEvent& other) const { return bits_ < other.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

/// Whether the top event occurs under the given outcome. Gate values are
/// memoized, so shared subtrees are evaluated once.
bool structure_function(const FaultTree& tree, const SafetyEvent& outcome);

inline constexpr std::size_t kDefaultCutSetBound = 20;

/// Every outcome for which the top event occurs, in ascending mask order.
/// Exhaustive over 2^n outcomes; trees with more than `bound` basic events
/// are rejected with ResourceError.
std::vector<SafetyEvent> cut_sets(const FaultTree& tree,
                                  std::size_t bound = kDefaultCutSetBound);

/// Ids referenced by more than one parent edge; empty iff the model is
/// tree structured. Used to phrase rejection diagnostics.
std::vector<std::string> shared_node_ids(const FaultTree& tree);

/// Per-basic-event failure probabilities: crisp values in [0, 1] or fuzzy
/// numbers whose support meets [0, 1]. Keyed by basic event id.
class Attribution {
 public:
  using Value = std::variant<double, FuzzyNumber>;

  void set_crisp(const std::string& id, double p);
  void set_fuzzy(const std::string& id, FuzzyNumber f);

  bool has(const std::string& id) const;
  const Value& value(const std::string& id) const;
  bool is_crisp(const std::string& id) const;
  double crisp(const std::string& id) const;
  const FuzzyNumber& fuzzy(const std::string& id) const;

  std::size_t size() const { return values_.size(); }
  bool all_crisp() const;
  bool any_discrete() const;
  bool any_convex_fuzzy() const;

  /// Sorted by id; serialization instead follows tree definition order.
  const std::map<std::string, Value>& entries() const { return values_; }

  /// Exact coverage: every basic event attributed, no stray ids.
  void ensure_covers(const FaultTree& tree) const;

 private:
  std::map<std::string, Value> values_;
};

}  // namespace fuzzfta

#endif  // FUZZFTA_FAULT_TREE_HPP
