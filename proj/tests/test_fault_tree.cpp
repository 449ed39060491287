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
#include <set>
#include <string>

#include "doctest.h"
#include "fuzzfta/errors.hpp"
#include "fuzzfta/ft_parser.hpp"

using namespace fuzzfta;

namespace {

const char* kRoadtripText =
    "toplevel trip;\n"
    "trip and a backup;\n"
    "backup or b c;\n"
    "a prob=0.8;\n"
    "b prob=0.1;\n"
    "c prob=0.4;\n";

FaultTree roadtrip_tree() { return parse_model(kRoadtripText).tree; }

}  // namespace

TEST_CASE("builder assembles trees with forward references") {
  FaultTree tree = FaultTreeBuilder()
                       .root("top")
                       .gate("top", NodeType::kAnd, {"left", "right"})
                       .gate("left", NodeType::kOr, {"a", "b"})
                       .basic_event("a")
                       .basic_event("b")
                       .basic_event("right")
                       .build();
  CHECK(tree.nodes().size() == 5);
  CHECK(tree.basic_event_count() == 3);
  CHECK(tree.validate().empty());
  CHECK(tree.is_tree_structured());
  CHECK(tree.index_of("left") >= 0);
  CHECK(tree.index_of("missing") == -1);

  // Basic events are listed in declaration order.
  CHECK(tree.node(tree.basic_events()[0]).id == "a");
  CHECK(tree.node(tree.basic_events()[1]).id == "b");
  CHECK(tree.node(tree.basic_events()[2]).id == "right");
}

TEST_CASE("builder rejects duplicates and unresolved names") {
  FaultTreeBuilder dup;
  dup.basic_event("a");
  CHECK_THROWS_AS(dup.basic_event("a"), ValidationError);

  FaultTreeBuilder unresolved;
  unresolved.root("top").gate("top", NodeType::kAnd, {"ghost"});
  CHECK_THROWS_AS(unresolved.build(), ValidationError);

  FaultTreeBuilder no_root;
  no_root.basic_event("a");
  CHECK_THROWS_AS(no_root.build(), ValidationError);
}

TEST_CASE("validate reports each structural defect") {
  SUBCASE("empty model") {
    FaultTree t = FaultTree::from_parts({}, 0);
    CHECK_FALSE(t.validate().empty());
  }
  SUBCASE("basic event with children") {
    std::vector<FtNode> nodes(2);
    nodes[0] = {"top", NodeType::kBasicEvent, {1}};
    nodes[1] = {"a", NodeType::kBasicEvent, {}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    auto diags = t.validate();
    REQUIRE_FALSE(diags.empty());
    bool mentions = std::any_of(diags.begin(), diags.end(), [](const std::string& d) {
      return d.find("basic event") != std::string::npos;
    });
    CHECK(mentions);
  }
  SUBCASE("gate without children") {
    std::vector<FtNode> nodes(1);
    nodes[0] = {"top", NodeType::kAnd, {}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    CHECK_FALSE(t.validate().empty());
  }
  SUBCASE("cycle through gates") {
    std::vector<FtNode> nodes(3);
    nodes[0] = {"top", NodeType::kAnd, {1}};
    nodes[1] = {"g1", NodeType::kOr, {2}};
    nodes[2] = {"g2", NodeType::kOr, {1}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    auto diags = t.validate();
    bool mentions = std::any_of(diags.begin(), diags.end(), [](const std::string& d) {
      return d.find("cycle") != std::string::npos;
    });
    CHECK(mentions);
    CHECK_THROWS_AS(t.ensure_valid(), ValidationError);
  }
  SUBCASE("gate referencing the root") {
    std::vector<FtNode> nodes(2);
    nodes[0] = {"top", NodeType::kAnd, {1}};
    nodes[1] = {"g", NodeType::kOr, {0}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    auto diags = t.validate();
    bool mentions = std::any_of(diags.begin(), diags.end(), [](const std::string& d) {
      return d.find("root") != std::string::npos;
    });
    CHECK(mentions);
  }
  SUBCASE("unreachable node") {
    std::vector<FtNode> nodes(3);
    nodes[0] = {"top", NodeType::kAnd, {1}};
    nodes[1] = {"a", NodeType::kBasicEvent, {}};
    nodes[2] = {"stranded", NodeType::kBasicEvent, {}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    auto diags = t.validate();
    bool mentions = std::any_of(diags.begin(), diags.end(), [](const std::string& d) {
      return d.find("unreachable") != std::string::npos;
    });
    CHECK(mentions);
  }
  SUBCASE("duplicate ids") {
    std::vector<FtNode> nodes(3);
    nodes[0] = {"top", NodeType::kAnd, {1, 2}};
    nodes[1] = {"a", NodeType::kBasicEvent, {}};
    nodes[2] = {"a", NodeType::kBasicEvent, {}};
    FaultTree t = FaultTree::from_parts(nodes, 0);
    CHECK_FALSE(t.validate().empty());
  }
}

TEST_CASE("shared nodes make the model a DAG, not a tree") {
  Model m = parse_model(
      "toplevel top;\n"
      "top or g1 g2;\n"
      "g1 and a b;\n"
      "g2 and b c;\n"
      "a prob=0.1; b prob=0.2; c prob=0.3;\n");
  CHECK(m.tree.validate().empty());
  CHECK_FALSE(m.tree.is_tree_structured());
  auto shared = shared_node_ids(m.tree);
  REQUIRE(shared.size() == 1);
  CHECK(shared[0] == "b");

  CHECK(roadtrip_tree().is_tree_structured());
  CHECK(shared_node_ids(roadtrip_tree()).empty());
}

TEST_CASE("safety events round-trip through strings and masks") {
  SafetyEvent e = SafetyEvent::from_string("101");
  CHECK(e.size() == 3);
  CHECK(e.occurred(0));
  CHECK_FALSE(e.occurred(1));
  CHECK(e.occurred(2));
  CHECK(e.to_string() == "101");

  SafetyEvent m = SafetyEvent::from_mask(0b101, 3);
  CHECK(m == e);

  SafetyEvent blank(4);
  CHECK(blank.to_string() == "0000");
  blank.set(2, true);
  CHECK(blank.to_string() == "0010");

  CHECK_THROWS_AS(SafetyEvent::from_string("10x"), ValidationError);
}

TEST_CASE("structure_function evaluates gates over an outcome") {
  FaultTree tree = roadtrip_tree();
  // trip = a AND (b OR c); basic event order is a, b, c.
  CHECK_FALSE(structure_function(tree, SafetyEvent::from_string("000")));
  CHECK_FALSE(structure_function(tree, SafetyEvent::from_string("100")));
  CHECK_FALSE(structure_function(tree, SafetyEvent::from_string("011")));
  CHECK(structure_function(tree, SafetyEvent::from_string("110")));
  CHECK(structure_function(tree, SafetyEvent::from_string("101")));
  CHECK(structure_function(tree, SafetyEvent::from_string("111")));
}

TEST_CASE("cut_sets enumerates every satisfying outcome in mask order") {
  auto sets = cut_sets(roadtrip_tree());
  REQUIRE(sets.size() == 3);
  std::set<std::string> got;
  for (const auto& s : sets) got.insert(s.to_string());
  CHECK(got == std::set<std::string>{"110", "101", "111"});
  // Ascending mask order: 011 (a,b set) precedes 101 and 111.
  CHECK(sets[0].to_string() == "110");
  CHECK(sets[1].to_string() == "101");
  CHECK(sets[2].to_string() == "111");
}

TEST_CASE("cut_sets refuses trees beyond the enumeration bound") {
  FaultTreeBuilder b;
  std::vector<std::string> kids;
  for (int i = 0; i < 21; ++i) {
    std::string id = "e" + std::to_string(i);
    b.basic_event(id);
    kids.push_back(id);
  }
  b.gate("top", NodeType::kOr, kids).root("top");
  FaultTree wide = b.build();
  CHECK_THROWS_AS(cut_sets(wide), ResourceError);
  CHECK_NOTHROW(cut_sets(wide, 21));
}

TEST_CASE("attribution validates crisp probabilities and fuzzy supports") {
  Attribution attr;
  attr.set_crisp("a", 0.5);
  CHECK(attr.is_crisp("a"));
  CHECK(attr.crisp("a") == 0.5);
  CHECK_THROWS_AS(attr.set_crisp("bad", -0.1), ValidationError);
  CHECK_THROWS_AS(attr.set_crisp("bad", 1.5), ValidationError);
  CHECK_THROWS_AS(attr.set_crisp("a", 0.7), ValidationError);  // duplicate

  attr.set_fuzzy("f", Triangular(0.1, 0.2, 0.3));
  CHECK_FALSE(attr.is_crisp("f"));
  CHECK_NOTHROW(attr.fuzzy("f"));
  CHECK_THROWS_AS(attr.fuzzy("a"), ValidationError);
  CHECK_THROWS_AS(attr.crisp("f"), ValidationError);
  CHECK_THROWS_AS(attr.crisp("missing"), ValidationError);

  // A fuzzy probability must put some possibility inside [0, 1].
  CHECK_THROWS_AS(attr.set_fuzzy("out", Triangular(1.5, 2.0, 2.5)), ValidationError);

  CHECK(attr.any_convex_fuzzy());
  CHECK_FALSE(attr.any_discrete());
  CHECK_FALSE(attr.all_crisp());
  attr.set_fuzzy("d", DiscreteFuzzy::singleton(0.5));
  CHECK(attr.any_discrete());
}

TEST_CASE("attribution coverage check names the offenders") {
  FaultTree tree = roadtrip_tree();
  Attribution attr;
  attr.set_crisp("a", 0.8);
  attr.set_crisp("stray", 0.5);
  try {
    attr.ensure_covers(tree);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    std::string msg = e.what();
    CHECK(msg.find("b") != std::string::npos);
    CHECK(msg.find("c") != std::string::npos);
    CHECK(msg.find("stray") != std::string::npos);
  }
}

TEST_CASE("parser builds the model with attributions") {
  Model m = parse_model(kRoadtripText, "roadtrip");
  CHECK(m.name == "roadtrip");
  CHECK(m.tree.basic_event_count() == 3);
  CHECK(m.attribution.crisp("a") == 0.8);
  CHECK(m.attribution.crisp("b") == 0.1);
  CHECK(m.attribution.crisp("c") == 0.4);
}

TEST_CASE("parser accepts every attribution kind and comments") {
  Model m = parse_model(
      "# header comment\n"
      "toplevel top;\n"
      "top or w x y z;  # trailing comment\n"
      "w prob=1e-3;\n"
      "x tri=0.1,0.2,0.3;\n"
      "y trap=0.1,0.2,0.3,0.4;\n"
      "z gauss=0.5,0.1;\n");
  CHECK(m.attribution.crisp("w") == 1e-3);
  CHECK(std::holds_alternative<Triangular>(m.attribution.fuzzy("x")));
  CHECK(std::holds_alternative<Trapezoidal>(m.attribution.fuzzy("y")));
  CHECK(std::holds_alternative<Gaussian>(m.attribution.fuzzy("z")));

  Model d = parse_model(
      "toplevel top;\n"
      "top and u;\n"
      "u discrete=0.5:1,0.8:0.25;\n");
  const auto& df = std::get<DiscreteFuzzy>(d.attribution.fuzzy("u"));
  REQUIRE(df.size() == 2);
  CHECK(df.membership(0.5) == 1.0);
  CHECK(df.membership(0.8) == 0.25);
}

TEST_CASE("parse errors carry the line number") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_model(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_line("toplevel top;\ntop and a b\n", 2);               // missing ';'
  expect_line("toplevel top;\ntop and a b;\na blah=1;\n", 3);   // unknown kind
  expect_line("toplevel top;\ntop and a;\ntop or a;\na prob=0.1;\n", 3);
  expect_line("toplevel top;\ntop and a;\na prob=nonsense;\n", 3);
  expect_line("toplevel top;\ntop and a;\na prob=0.1;\ntop prob=0.5;\n", 4);
  expect_line("toplevel top;\ntop and a;\na prob=0.1;\nghost prob=0.5;\n", 4);
  expect_line("toplevel top;\ntop and a;\na prob=0.1;\na prob=0.2;\n", 4);
  expect_line("toplevel top;\ntop and;\n", 2);                  // no children
  expect_line("toplevel top;\ntop and a;\na prob=1.5;\n", 3);   // out of range
  expect_line("toplevel top;\ntop and a;\na gauss=0.5,0;\n", 3);
}

TEST_CASE("parser reports missing attributions and missing toplevel") {
  CHECK_THROWS_AS(parse_model("toplevel top;\ntop and a b;\na prob=0.1;\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_model("top and a b;\na prob=0.1;\nb prob=0.2;\n"), ParseError);
  CHECK_THROWS_AS(parse_model("toplevel top;\ntoplevel top;\ntop and a;\na prob=0.1;\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_model(""), ParseError);
}

TEST_CASE("serialization round-trips exactly") {
  const char* texts[] = {
      kRoadtripText,
      "toplevel top;\n"
      "top or g1 g2 e9;\n"
      "g1 and a b;\n"
      "g2 or c g3;\n"
      "g3 and d e9;\n"  // shared node keeps its single definition
      "a prob=0.30000000000000004;\n"
      "b tri=1e-05,0.0001,0.001;\n"
      "c trap=0.1,0.2,0.30000000000000004,0.4;\n"
      "d gauss=0.007,0.0028;\n"
      "e9 discrete=0.1:0.125,0.30000000000000004:1;\n",
  };
  for (const char* text : texts) {
    Model m1 = parse_model(text, "t");
    std::string s1 = serialize_model(m1);
    Model m2 = parse_model(s1, "t");
    std::string s2 = serialize_model(m2);
    CHECK(s1 == s2);
    CHECK(m1.tree.nodes().size() == m2.tree.nodes().size());
    for (std::size_t i = 0; i < m1.tree.nodes().size(); ++i) {
      const FtNode& n = m1.tree.nodes()[i];
      int j = m2.tree.index_of(n.id);
      REQUIRE(j >= 0);
      CHECK(m2.tree.node(j).type == n.type);
      CHECK(m2.tree.node(j).children.size() == n.children.size());
    }
  }
}

TEST_CASE("load_model rejects unreadable paths") {
  CHECK_THROWS_AS(load_model("/nonexistent/deeply/nested/file.ft"), ParseError);
}
