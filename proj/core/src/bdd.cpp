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

#include "fuzzfta/bdd.hpp"

#include <limits>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

namespace {

struct NodeKey {
  int var;
  Bdd::Ref low;
  Bdd::Ref high;

  bool operator==(const NodeKey& o) const {
    return var == o.var && low == o.low && high == o.high;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(k.var) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(k.low) * 0xC2B2AE3D27D4EB4Full;
    h ^= static_cast<std::uint64_t>(k.high) * 0x165667B19E3779F9ull;
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::string> default_order(const FaultTree& tree) {
  std::vector<std::string> order;
  std::vector<char> seen(tree.nodes().size(), 0);
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    const FtNode& nd = tree.node(v);
    if (nd.type == NodeType::kBasicEvent) {
      order.push_back(nd.id);
      continue;
    }
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }
  return order;
}

}  // namespace

class BddBuilder {
 public:
  BddBuilder(const FaultTree& tree, std::vector<std::string> order, std::size_t cap)
      : tree_(tree), order_(std::move(order)), cap_(cap) {
    nodes_.push_back({-1, Bdd::kFalse, Bdd::kFalse});
    nodes_.push_back({-1, Bdd::kTrue, Bdd::kTrue});
    for (std::size_t lvl = 0; lvl < order_.size(); ++lvl) {
      level_of_.emplace(order_[lvl], static_cast<int>(lvl));
    }
  }

  Bdd run() {
    std::vector<Bdd::Ref> memo(tree_.nodes().size(), std::numeric_limits<Bdd::Ref>::max());
    Bdd::Ref root = compile(tree_.root(), memo);

    // Sweep apply() intermediates no longer reachable from the root so
    // node_count() reflects the reduced diagram. Children sit at lower
    // indices, so one descending mark pass and one ascending copy suffice.
    std::vector<char> mark(nodes_.size(), 0);
    if (!Bdd::is_terminal(root)) mark[static_cast<std::size_t>(root)] = 1;
    for (std::size_t i = nodes_.size(); i-- > 2;) {
      if (!mark[i]) continue;
      if (!Bdd::is_terminal(nodes_[i].low)) mark[static_cast<std::size_t>(nodes_[i].low)] = 1;
      if (!Bdd::is_terminal(nodes_[i].high)) mark[static_cast<std::size_t>(nodes_[i].high)] = 1;
    }
    std::vector<Bdd::Node> compact = {nodes_[0], nodes_[1]};
    std::vector<Bdd::Ref> remap(nodes_.size(), 0);
    remap[0] = Bdd::kFalse;
    remap[1] = Bdd::kTrue;
    for (std::size_t i = 2; i < nodes_.size(); ++i) {
      if (!mark[i]) continue;
      remap[i] = static_cast<Bdd::Ref>(compact.size());
      Bdd::Node nd = nodes_[i];
      nd.low = remap[nd.low];
      nd.high = remap[nd.high];
      compact.push_back(nd);
    }
    if (!Bdd::is_terminal(root)) root = remap[static_cast<std::size_t>(root)];
    return Bdd(std::move(compact), root, std::move(order_));
  }

 private:
  int level(Bdd::Ref r) const {
    return Bdd::is_terminal(r) ? std::numeric_limits<int>::max()
                               : nodes_[static_cast<std::size_t>(r)].var;
  }

  Bdd::Ref mk(int var, Bdd::Ref low, Bdd::Ref high) {
    if (low == high) return low;
    const NodeKey key{var, low, high};
    auto it = unique_.find(key);
    if (it != unique_.end()) return it->second;
    if (nodes_.size() >= cap_) {
      throw ResourceError("bdd: node table exceeded the cap of " + std::to_string(cap_) +
                          " nodes");
    }
    const Bdd::Ref ref = static_cast<Bdd::Ref>(nodes_.size());
    nodes_.push_back({var, low, high});
    unique_.emplace(key, ref);
    return ref;
  }

  Bdd::Ref apply(bool conj, Bdd::Ref a, Bdd::Ref b) {
    if (conj) {
      if (a == Bdd::kFalse || b == Bdd::kFalse) return Bdd::kFalse;
      if (a == Bdd::kTrue) return b;
      if (b == Bdd::kTrue) return a;
    } else {
      if (a == Bdd::kTrue || b == Bdd::kTrue) return Bdd::kTrue;
      if (a == Bdd::kFalse) return b;
      if (b == Bdd::kFalse) return a;
    }
    if (a == b) return a;
    if (a > b) std::swap(a, b);  // both ops are commutative
    auto& cache = conj ? and_cache_ : or_cache_;
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int la = level(a);
    const int lb = level(b);
    const int top = la < lb ? la : lb;
    const Bdd::Ref a_low = la == top ? nodes_[a].low : a;
    const Bdd::Ref a_high = la == top ? nodes_[a].high : a;
    const Bdd::Ref b_low = lb == top ? nodes_[b].low : b;
    const Bdd::Ref b_high = lb == top ? nodes_[b].high : b;
    const Bdd::Ref low = apply(conj, a_low, b_low);
    const Bdd::Ref high = apply(conj, a_high, b_high);
    const Bdd::Ref result = mk(top, low, high);
    cache.emplace(key, result);
    return result;
  }

  Bdd::Ref compile(int v, std::vector<Bdd::Ref>& memo) {
    Bdd::Ref& slot = memo[static_cast<std::size_t>(v)];
    if (slot != std::numeric_limits<Bdd::Ref>::max()) return slot;
    const FtNode& nd = tree_.node(v);
    Bdd::Ref ref;
    if (nd.type == NodeType::kBasicEvent) {
      ref = mk(level_of_.at(nd.id), Bdd::kFalse, Bdd::kTrue);
    } else {
      const bool conj = nd.type == NodeType::kAnd;
      ref = conj ? Bdd::kTrue : Bdd::kFalse;
      bool first = true;
      for (int c : nd.children) {
        const Bdd::Ref child = compile(c, memo);
        ref = first ? child : apply(conj, ref, child);
        first = false;
      }
    }
    slot = ref;
    return ref;
  }

  const FaultTree& tree_;
  std::vector<std::string> order_;
  std::size_t cap_;
  std::vector<Bdd::Node> nodes_;
  std::unordered_map<NodeKey, Bdd::Ref, NodeKeyHash> unique_;
  std::unordered_map<std::uint64_t, Bdd::Ref> and_cache_;
  std::unordered_map<std::uint64_t, Bdd::Ref> or_cache_;
  std::unordered_map<std::string, int> level_of_;
};

Bdd build_bdd(const FaultTree& tree, const std::vector<std::string>& order,
              std::size_t node_cap) {
  tree.ensure_valid();
  std::vector<std::string> resolved = order.empty() ? default_order(tree) : order;
  if (resolved.size() != tree.basic_event_count()) {
    throw ValidationError("bdd order: expected " + std::to_string(tree.basic_event_count()) +
                          " basic events, got " + std::to_string(resolved.size()));
  }
  std::unordered_set<std::string> seen;
  for (const std::string& id : resolved) {
    const int idx = tree.index_of(id);
    if (idx < 0 || tree.node(idx).type != NodeType::kBasicEvent) {
      throw ValidationError("bdd order: '" + id + "' is not a basic event of the tree");
    }
    if (!seen.insert(id).second) {
      throw ValidationError("bdd order: duplicate basic event '" + id + "'");
    }
  }
  return BddBuilder(tree, std::move(resolved), node_cap).run();
}

double unreliability_bdd(const Bdd& bdd, const Attribution& attribution) {
  std::vector<double> prob(bdd.variable_order().size());
  for (std::size_t lvl = 0; lvl < prob.size(); ++lvl) {
    prob[lvl] = attribution.crisp(bdd.variable_order()[lvl]);
  }
  // nodes()[i] only references lower indices, so one forward pass suffices.
  std::vector<double> value(bdd.nodes().size());
  value[Bdd::kFalse] = 0.0;
  value[Bdd::kTrue] = 1.0;
  for (std::size_t i = 2; i < bdd.nodes().size(); ++i) {
    const Bdd::Node& nd = bdd.nodes()[i];
    const double p = prob[static_cast<std::size_t>(nd.var)];
    value[i] = p * value[nd.high] + (1.0 - p) * value[nd.low];
  }
  return value[bdd.root()];
}

}  // namespace fuzzfta
