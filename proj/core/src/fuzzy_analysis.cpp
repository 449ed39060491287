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

#include "fuzzfta/fuzzy_analysis.hpp"

#include <algorithm>
#include <utility>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

namespace {

DiscreteFuzzy clamp_unit_discrete(const DiscreteFuzzy& d) {
  std::vector<DiscreteFuzzy::Entry> entries;
  entries.reserve(d.size());
  for (const DiscreteFuzzy::Entry& e : d.support()) {
    entries.push_back({std::clamp(e.value, 0.0, 1.0), e.membership});
  }
  return DiscreteFuzzy(std::move(entries));
}

// Finite-support view of the attribution in basic event definition order.
// Crisp values become membership-1 singletons; probability semantics clamp
// support values into [0, 1].
std::vector<DiscreteFuzzy> finite_supports(const FaultTree& tree,
                                           const Attribution& attribution,
                                           const char* method) {
  std::vector<DiscreteFuzzy> supports;
  supports.reserve(tree.basic_event_count());
  for (int be : tree.basic_events()) {
    const std::string& id = tree.node(be).id;
    const Attribution::Value& value = attribution.value(id);
    if (const double* p = std::get_if<double>(&value)) {
      supports.push_back(DiscreteFuzzy::singleton(*p));
      continue;
    }
    const FuzzyNumber& f = std::get<FuzzyNumber>(value);
    if (const DiscreteFuzzy* d = std::get_if<DiscreteFuzzy>(&f)) {
      supports.push_back(clamp_unit_discrete(*d));
      continue;
    }
    throw MethodError(std::string(method) +
                      " needs finite supports, but the attribution for '" + id +
                      "' is a continuous shape; use the alpha-cut method");
  }
  return supports;
}

void reject_shared(const FaultTree& tree, const char* method, const char* alternative) {
  if (tree.is_tree_structured()) return;
  std::string msg = std::string(method) +
                    " requires a tree-structured model; shared nodes:";
  for (const std::string& id : shared_node_ids(tree)) msg += " '" + id + "'";
  msg += "; ";
  msg += alternative;
  throw MethodError(msg);
}

DiscreteFuzzy fold_discrete(const FaultTree& tree, int v,
                            const std::vector<DiscreteFuzzy>& leaf,
                            const std::vector<int>& event_pos) {
  const FtNode& nd = tree.node(v);
  if (nd.type == NodeType::kBasicEvent) {
    return leaf[static_cast<std::size_t>(event_pos[static_cast<std::size_t>(v)])];
  }
  if (nd.type == NodeType::kAnd) {
    DiscreteFuzzy acc = fold_discrete(tree, nd.children[0], leaf, event_pos);
    for (std::size_t i = 1; i < nd.children.size(); ++i) {
      acc = zadeh_binary(BinOp::kMul, acc, fold_discrete(tree, nd.children[i], leaf, event_pos));
    }
    return acc;
  }
  DiscreteFuzzy acc = complement(fold_discrete(tree, nd.children[0], leaf, event_pos));
  for (std::size_t i = 1; i < nd.children.size(); ++i) {
    acc = zadeh_binary(BinOp::kMul, acc,
                       complement(fold_discrete(tree, nd.children[i], leaf, event_pos)));
  }
  return complement(acc);
}

AlphaCutSeries fold_alpha(const FaultTree& tree, int v, const Attribution& attribution,
                          int n_cuts) {
  const FtNode& nd = tree.node(v);
  if (nd.type == NodeType::kBasicEvent) {
    const Attribution::Value& value = attribution.value(nd.id);
    if (const double* p = std::get_if<double>(&value)) {
      return AlphaCutSeries::constant(n_cuts, Interval(*p, *p));
    }
    const FuzzyNumber& f = std::get<FuzzyNumber>(value);
    if (std::holds_alternative<DiscreteFuzzy>(f)) {
      throw MethodError("the alpha-cut fold handles continuous shapes only, but the "
                        "attribution for '" +
                        nd.id + "' has a finite support; use the discrete fold");
    }
    return discretize(f, n_cuts, /*clamp_to_unit=*/true);
  }
  if (nd.type == NodeType::kAnd) {
    AlphaCutSeries acc = fold_alpha(tree, nd.children[0], attribution, n_cuts);
    for (std::size_t i = 1; i < nd.children.size(); ++i) {
      acc = series_op(BinOp::kMul, acc, fold_alpha(tree, nd.children[i], attribution, n_cuts));
    }
    return acc;
  }
  AlphaCutSeries acc = complement(fold_alpha(tree, nd.children[0], attribution, n_cuts));
  for (std::size_t i = 1; i < nd.children.size(); ++i) {
    acc = series_op(BinOp::kMul, acc,
                    complement(fold_alpha(tree, nd.children[i], attribution, n_cuts)));
  }
  return complement(acc);
}

std::vector<int> event_positions(const FaultTree& tree) {
  std::vector<int> pos(tree.nodes().size(), -1);
  for (std::size_t k = 0; k < tree.basic_events().size(); ++k) {
    pos[static_cast<std::size_t>(tree.basic_events()[k])] = static_cast<int>(k);
  }
  return pos;
}

// Extension of (p, h, l) -> p*h + (1 - p)*l in one step, so the three
// operands are varied jointly rather than through nested binary ops.
DiscreteFuzzy zadeh_ite(const DiscreteFuzzy& p, const DiscreteFuzzy& h, const DiscreteFuzzy& l) {
  std::vector<DiscreteFuzzy::Entry> out;
  out.reserve(p.size() * h.size() * l.size());
  for (const DiscreteFuzzy::Entry& ep : p.support()) {
    for (const DiscreteFuzzy::Entry& eh : h.support()) {
      for (const DiscreteFuzzy::Entry& el : l.support()) {
        const double value = ep.value * eh.value + (1.0 - ep.value) * el.value;
        const double mu = std::min(ep.membership, std::min(eh.membership, el.membership));
        out.push_back({value, mu});
      }
    }
  }
  return DiscreteFuzzy(std::move(out));
}

}  // namespace

DiscreteFuzzy fuzzy_unreliability_exact(const FaultTree& tree, const Attribution& attribution,
                                        std::size_t cutset_bound,
                                        std::size_t support_product_cap) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  const std::vector<SafetyEvent> sets = cut_sets(tree, cutset_bound);
  const std::vector<DiscreteFuzzy> supports =
      finite_supports(tree, attribution, "exact enumeration");

  double combinations = 1.0;
  for (const DiscreteFuzzy& s : supports) combinations *= static_cast<double>(s.size());
  if (combinations > static_cast<double>(support_product_cap)) {
    throw ResourceError("exact enumeration: " + std::to_string(combinations) +
                        " support combinations exceed the cap of " +
                        std::to_string(support_product_cap));
  }

  const std::size_t n = supports.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<DiscreteFuzzy::Entry> out;
  out.reserve(static_cast<std::size_t>(combinations));
  std::vector<double> prob(n);
  for (;;) {
    double mu = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const DiscreteFuzzy::Entry& e = supports[i].support()[idx[i]];
      prob[i] = e.value;
      mu = std::min(mu, e.membership);
    }
    double u = 0.0;
    for (const SafetyEvent& ev : sets) {
      double term = 1.0;
      for (std::size_t i = 0; i < n; ++i) {
        term *= ev.occurred(i) ? prob[i] : 1.0 - prob[i];
      }
      u += term;
    }
    out.push_back({u, mu});

    std::size_t k = 0;
    while (k < n && ++idx[k] == supports[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return DiscreteFuzzy(std::move(out));
}

DiscreteFuzzy fuzzy_unreliability_bu_discrete(const FaultTree& tree,
                                              const Attribution& attribution) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  reject_shared(tree, "the discrete bottom-up fold",
                "use the exact enumeration, which handles shared events");
  const std::vector<DiscreteFuzzy> leaf =
      finite_supports(tree, attribution, "the discrete bottom-up fold");
  return fold_discrete(tree, tree.root(), leaf, event_positions(tree));
}

AlphaCutSeries fuzzy_unreliability_bu_alpha(const FaultTree& tree,
                                            const Attribution& attribution, int n_cuts) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  reject_shared(tree, "the alpha-cut fold",
                "restructure the model, or use exact enumeration for finite supports");
  return fold_alpha(tree, tree.root(), attribution, n_cuts);
}

CounterexampleReport fuzzy_bdd_counterexample(const FaultTree& tree,
                                              const Attribution& attribution,
                                              const std::vector<std::string>& order) {
  tree.ensure_valid();
  attribution.ensure_covers(tree);
  const Bdd bdd = build_bdd(tree, order);
  const std::vector<DiscreteFuzzy> supports =
      finite_supports(tree, attribution, "the diagram evaluation");
  std::vector<const DiscreteFuzzy*> by_level(bdd.variable_order().size());
  for (std::size_t lvl = 0; lvl < by_level.size(); ++lvl) {
    const int idx = tree.index_of(bdd.variable_order()[lvl]);
    const std::vector<int>& events = tree.basic_events();
    const std::size_t pos = static_cast<std::size_t>(
        std::find(events.begin(), events.end(), idx) - events.begin());
    by_level[lvl] = &supports[pos];
  }

  std::vector<DiscreteFuzzy> value;
  value.reserve(bdd.nodes().size());
  value.push_back(DiscreteFuzzy::singleton(0.0));
  value.push_back(DiscreteFuzzy::singleton(1.0));
  for (std::size_t i = 2; i < bdd.nodes().size(); ++i) {
    const Bdd::Node& nd = bdd.nodes()[i];
    value.push_back(zadeh_ite(*by_level[static_cast<std::size_t>(nd.var)], value[nd.high],
                              value[nd.low]));
  }

  CounterexampleReport report{value[bdd.root()], fuzzy_unreliability_exact(tree, attribution),
                              false};
  report.differ = !discrete_equal(report.naive_bdd, report.exact);
  return report;
}

Model counterexample_model() {
  return parse_model(
      "toplevel top;\n"
      "top or v uw;\n"
      "uw and u w;\n"
      "u discrete=0.5:1;\n"
      "v discrete=0:1,1:1;\n"
      "w discrete=0.5:1;\n",
      "counterexample");
}

std::vector<std::string> counterexample_order() { return {"u", "v", "w"}; }

}  // namespace fuzzfta
