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

#include "fuzzfta/fault_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

const char* node_type_name(NodeType type) {
  switch (type) {
    case NodeType::kBasicEvent:
      return "basic-event";
    case NodeType::kAnd:
      return "and";
    case NodeType::kOr:
      return "or";
  }
  return "unknown";
}

FaultTree FaultTree::from_parts(std::vector<FtNode> nodes, int root) {
  FaultTree tree;
  tree.nodes_ = std::move(nodes);
  tree.root_ = root;
  tree.reindex();
  return tree;
}

void FaultTree::reindex() {
  index_.clear();
  basic_events_.clear();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    // Duplicate ids keep the first index; validate() reports the clash.
    index_.emplace(nodes_[i].id, static_cast<int>(i));
    if (nodes_[i].type == NodeType::kBasicEvent) {
      basic_events_.push_back(static_cast<int>(i));
    }
  }
}

int FaultTree::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> FaultTree::validate() const {
  std::vector<std::string> diags;
  const int n = static_cast<int>(nodes_.size());
  if (n == 0) {
    diags.push_back("model has no nodes");
    return diags;
  }
  if (root_ < 0 || root_ >= n) {
    diags.push_back("root index " + std::to_string(root_) + " is out of range");
    return diags;
  }

  std::unordered_map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    const FtNode& nd = nodes_[static_cast<std::size_t>(i)];
    auto [it, inserted] = seen.emplace(nd.id, i);
    if (!inserted) diags.push_back("duplicate node id '" + nd.id + "'");
    if (nd.type == NodeType::kBasicEvent) {
      if (!nd.children.empty()) {
        diags.push_back("basic event '" + nd.id + "' has children");
      }
    } else if (nd.children.empty()) {
      diags.push_back("gate '" + nd.id + "' has no children");
    }
    for (int c : nd.children) {
      if (c < 0 || c >= n) {
        diags.push_back("gate '" + nd.id + "' references an out-of-range child index " +
                        std::to_string(c));
      } else if (c == root_) {
        diags.push_back("root '" + nodes_[static_cast<std::size_t>(root_)].id +
                        "' is referenced by gate '" + nd.id + "'");
      }
    }
  }
  if (!diags.empty()) return diags;  // index-based walks below need sane children

  // Colored DFS: 0 unseen, 1 on stack, 2 done.
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, std::size_t>> stack;
  stack.emplace_back(root_, 0);
  color[static_cast<std::size_t>(root_)] = 1;
  bool cycle = false;
  while (!stack.empty() && !cycle) {
    auto& [v, next] = stack.back();
    const FtNode& nd = nodes_[static_cast<std::size_t>(v)];
    if (next == nd.children.size()) {
      color[static_cast<std::size_t>(v)] = 2;
      stack.pop_back();
      continue;
    }
    const int c = nd.children[next++];
    if (color[static_cast<std::size_t>(c)] == 1) {
      diags.push_back("cycle detected through '" + nodes_[static_cast<std::size_t>(c)].id + "'");
      cycle = true;
    } else if (color[static_cast<std::size_t>(c)] == 0) {
      color[static_cast<std::size_t>(c)] = 1;
      stack.emplace_back(c, 0);
    }
  }
  if (cycle) return diags;

  for (int i = 0; i < n; ++i) {
    if (color[static_cast<std::size_t>(i)] == 0) {
      diags.push_back("node '" + nodes_[static_cast<std::size_t>(i)].id +
                      "' is unreachable from the root");
    }
  }
  return diags;
}

void FaultTree::ensure_valid() const {
  const std::vector<std::string> diags = validate();
  if (diags.empty()) return;
  std::string msg = "invalid fault tree: ";
  for (std::size_t i = 0; i < diags.size(); ++i) {
    if (i > 0) msg += "; ";
    msg += diags[i];
  }
  throw ValidationError(msg);
}

bool FaultTree::is_tree_structured() const {
  std::vector<int> refs(nodes_.size(), 0);
  for (const FtNode& nd : nodes_) {
    for (int c : nd.children) ++refs[static_cast<std::size_t>(c)];
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int expected = static_cast<int>(i) == root_ ? 0 : 1;
    if (refs[i] != expected) return false;
  }
  return true;
}

FaultTreeBuilder& FaultTreeBuilder::basic_event(const std::string& id) {
  if (!declared_.emplace(id, decls_.size()).second) {
    throw ValidationError("duplicate node id '" + id + "'");
  }
  decls_.push_back(Decl{id, NodeType::kBasicEvent, {}});
  return *this;
}

FaultTreeBuilder& FaultTreeBuilder::gate(const std::string& id, NodeType type,
                                         const std::vector<std::string>& children) {
  if (type == NodeType::kBasicEvent) {
    throw ValidationError("gate '" + id + "' must be an and/or gate");
  }
  if (!declared_.emplace(id, decls_.size()).second) {
    throw ValidationError("duplicate node id '" + id + "'");
  }
  decls_.push_back(Decl{id, type, children});
  return *this;
}

FaultTreeBuilder& FaultTreeBuilder::root(const std::string& id) {
  root_id_ = id;
  return *this;
}

FaultTree FaultTreeBuilder::build() const {
  FaultTree tree;
  tree.nodes_.reserve(decls_.size());
  for (const Decl& d : decls_) {
    tree.nodes_.push_back(FtNode{d.id, d.type, {}});
  }
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    for (const std::string& child : decls_[i].children) {
      auto it = declared_.find(child);
      if (it == declared_.end()) {
        throw ValidationError("gate '" + decls_[i].id + "' references undefined node '" +
                              child + "'");
      }
      tree.nodes_[i].children.push_back(static_cast<int>(it->second));
    }
  }
  if (root_id_.empty()) throw ValidationError("no root declared");
  auto it = declared_.find(root_id_);
  if (it == declared_.end()) {
    throw ValidationError("root '" + root_id_ + "' is not a declared node");
  }
  tree.root_ = static_cast<int>(it->second);
  tree.reindex();
  tree.ensure_valid();
  return tree;
}

SafetyEvent SafetyEvent::from_string(const std::string& bits) {
  SafetyEvent ev(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      ev.set(i, true);
    } else if (bits[i] != '0') {
      throw ValidationError("safety event strings use only '0'/'1', got '" + bits + "'");
    }
  }
  return ev;
}

SafetyEvent SafetyEvent::from_mask(std::uint64_t mask, std::size_t n_events) {
  SafetyEvent ev(n_events);
  for (std::size_t i = 0; i < n_events; ++i) {
    ev.set(i, ((mask >> i) & 1u) != 0);
  }
  return ev;
}

std::string SafetyEvent::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

namespace {

// Memoized gate evaluation; callers guarantee the model is acyclic.
bool eval_node(const FaultTree& tree, int v, const std::vector<int>& event_pos,
               const SafetyEvent& outcome, std::vector<signed char>& memo) {
  signed char& slot = memo[static_cast<std::size_t>(v)];
  if (slot >= 0) return slot != 0;
  const FtNode& nd = tree.node(v);
  bool value = false;
  switch (nd.type) {
    case NodeType::kBasicEvent:
      value = outcome.occurred(static_cast<std::size_t>(event_pos[static_cast<std::size_t>(v)]));
      break;
    case NodeType::kAnd:
      value = true;
      for (int c : nd.children) value = eval_node(tree, c, event_pos, outcome, memo) && value;
      break;
    case NodeType::kOr:
      value = false;
      for (int c : nd.children) value = eval_node(tree, c, event_pos, outcome, memo) || value;
      break;
  }
  slot = value ? 1 : 0;
  return value;
}

std::vector<int> event_positions(const FaultTree& tree) {
  std::vector<int> pos(tree.nodes().size(), -1);
  const std::vector<int>& events = tree.basic_events();
  for (std::size_t k = 0; k < events.size(); ++k) {
    pos[static_cast<std::size_t>(events[k])] = static_cast<int>(k);
  }
  return pos;
}

}  // namespace

bool structure_function(const FaultTree& tree, const SafetyEvent& outcome) {
  tree.ensure_valid();
  if (outcome.size() != tree.basic_event_count()) {
    throw std::invalid_argument("structure_function: outcome has " +
                                std::to_string(outcome.size()) + " events, tree has " +
                                std::to_string(tree.basic_event_count()));
  }
  const std::vector<int> pos = event_positions(tree);
  std::vector<signed char> memo(tree.nodes().size(), -1);
  return eval_node(tree, tree.root(), pos, outcome, memo);
}

std::vector<SafetyEvent> cut_sets(const FaultTree& tree, std::size_t bound) {
  tree.ensure_valid();
  const std::size_t n = tree.basic_event_count();
  if (n > bound) {
    throw ResourceError("cut_sets: " + std::to_string(n) + " basic events exceed the bound of " +
                        std::to_string(bound) + " (2^n outcomes would be enumerated)");
  }
  const std::vector<int> pos = event_positions(tree);
  std::vector<SafetyEvent> sets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SafetyEvent ev = SafetyEvent::from_mask(mask, n);
    std::vector<signed char> memo(tree.nodes().size(), -1);
    if (eval_node(tree, tree.root(), pos, ev, memo)) sets.push_back(std::move(ev));
  }
  return sets;
}

std::vector<std::string> shared_node_ids(const FaultTree& tree) {
  std::vector<int> refs(tree.nodes().size(), 0);
  for (const FtNode& nd : tree.nodes()) {
    for (int c : nd.children) ++refs[static_cast<std::size_t>(c)];
  }
  std::vector<std::string> shared;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i] > 1) shared.push_back(tree.node(static_cast<int>(i)).id);
  }
  return shared;
}

void Attribution::set_crisp(const std::string& id, double p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw ValidationError("attribution for '" + id + "': probability " + std::to_string(p) +
                          " is outside [0, 1]");
  }
  if (!values_.emplace(id, p).second) {
    throw ValidationError("duplicate attribution for '" + id + "'");
  }
}

void Attribution::set_fuzzy(const std::string& id, FuzzyNumber f) {
  if (!support_intersects_unit(f)) {
    throw ValidationError("attribution for '" + id +
                          "': fuzzy support does not intersect [0, 1]");
  }
  if (!values_.emplace(id, std::move(f)).second) {
    throw ValidationError("duplicate attribution for '" + id + "'");
  }
}

bool Attribution::has(const std::string& id) const { return values_.count(id) != 0; }

const Attribution::Value& Attribution::value(const std::string& id) const {
  auto it = values_.find(id);
  if (it == values_.end()) {
    throw ValidationError("no attribution for basic event '" + id + "'");
  }
  return it->second;
}

bool Attribution::is_crisp(const std::string& id) const {
  return std::holds_alternative<double>(value(id));
}

double Attribution::crisp(const std::string& id) const {
  const Value& v = value(id);
  if (const double* p = std::get_if<double>(&v)) return *p;
  throw ValidationError("attribution for '" + id + "' is fuzzy, expected crisp");
}

const FuzzyNumber& Attribution::fuzzy(const std::string& id) const {
  const Value& v = value(id);
  if (const FuzzyNumber* f = std::get_if<FuzzyNumber>(&v)) return *f;
  throw ValidationError("attribution for '" + id + "' is crisp, expected fuzzy");
}

bool Attribution::all_crisp() const {
  for (const auto& [id, v] : values_) {
    if (!std::holds_alternative<double>(v)) return false;
  }
  return true;
}

bool Attribution::any_discrete() const {
  for (const auto& [id, v] : values_) {
    if (const FuzzyNumber* f = std::get_if<FuzzyNumber>(&v)) {
      if (std::holds_alternative<DiscreteFuzzy>(*f)) return true;
    }
  }
  return false;
}

bool Attribution::any_convex_fuzzy() const {
  for (const auto& [id, v] : values_) {
    if (const FuzzyNumber* f = std::get_if<FuzzyNumber>(&v)) {
      if (!std::holds_alternative<DiscreteFuzzy>(*f)) return true;
    }
  }
  return false;
}

void Attribution::ensure_covers(const FaultTree& tree) const {
  std::vector<std::string> missing;
  for (int be : tree.basic_events()) {
    if (!has(tree.node(be).id)) missing.push_back(tree.node(be).id);
  }
  std::vector<std::string> extra;
  for (const auto& [id, v] : values_) {
    const int idx = tree.index_of(id);
    if (idx < 0 || tree.node(idx).type != NodeType::kBasicEvent) extra.push_back(id);
  }
  if (missing.empty() && extra.empty()) return;
  std::string msg = "attribution does not cover the fault tree:";
  for (const std::string& id : missing) msg += " missing '" + id + "'";
  for (const std::string& id : extra) msg += " stray '" + id + "'";
  throw ValidationError(msg);
}

}  // namespace fuzzfta
