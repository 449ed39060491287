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

#include "fuzzfta/ft_parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fuzzfta/errors.hpp"

namespace fuzzfta {

namespace {

bool is_word_char(char c) {
  // Identifier charset plus '+' so exponents like 1e+5 lex as one token;
  // '+' is rejected again when the token is used as an identifier.
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' ||
         c == '+';
}

struct Token {
  enum Kind { kWord, kPunct, kEnd } kind = kEnd;
  std::string text;
  int line = 0;
  int column = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_blank();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= text_.size()) {
      tok.kind = Token::kEnd;
      return tok;
    }
    const char c = text_[pos_];
    if (c == ';' || c == '=' || c == ',' || c == ':') {
      tok.kind = Token::kPunct;
      tok.text = c;
      advance();
      return tok;
    }
    if (!is_word_char(c)) {
      throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
    }
    tok.kind = Token::kWord;
    while (pos_ < text_.size() && is_word_char(text_[pos_])) {
      tok.text += text_[pos_];
      advance();
    }
    return tok;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

struct GateStmt {
  std::string id;
  NodeType type;
  std::vector<std::string> children;
  int line;
};

struct AttrStmt {
  std::string id;
  Attribution::Value value;
  int line;
};

void check_identifier(const Token& tok) {
  for (char c : tok.text) {
    if (c == '+') {
      throw ParseError("invalid identifier '" + tok.text + "'", tok.line, tok.column);
    }
  }
}

double parse_real(const Token& tok) {
  if (tok.kind != Token::kWord) {
    throw ParseError("expected a number, got '" + tok.text + "'", tok.line, tok.column);
  }
  const char* begin = tok.text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + tok.text.size() || tok.text.empty()) {
    throw ParseError("expected a number, got '" + tok.text + "'", tok.line, tok.column);
  }
  return value;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { bump(); }

  void run() {
    while (cur_.kind != Token::kEnd) {
      statement();
    }
    if (toplevel_.empty()) {
      throw ParseError("missing toplevel declaration");
    }
  }

  Model assemble(const std::string& name) {
    std::unordered_set<std::string> gate_heads;
    std::unordered_set<std::string> referenced;
    for (const GateStmt& g : gates_) {
      if (!gate_heads.insert(g.id).second) {
        throw ParseError("duplicate definition of gate '" + g.id + "'", g.line);
      }
      for (const std::string& c : g.children) referenced.insert(c);
    }
    for (const AttrStmt& a : attrs_) {
      if (gate_heads.count(a.id)) {
        throw ParseError("'" + a.id + "' is a gate; only basic events take attributions",
                         a.line);
      }
      if (!referenced.count(a.id) && a.id != toplevel_) {
        throw ParseError("attributed node '" + a.id + "' does not appear in the fault tree",
                         a.line);
      }
    }

    // Declaration order follows first textual occurrence: a gate at its
    // defining line, a basic event where it is first named.
    FaultTreeBuilder builder;
    std::unordered_set<std::string> declared;
    for (const GateStmt& g : gates_) {
      declared.insert(g.id);
    }
    std::unordered_set<std::string> emitted;
    auto declare_event = [&](const std::string& id) {
      if (declared.count(id) || emitted.count(id)) return;
      emitted.insert(id);
      builder.basic_event(id);
    };
    for (const GateStmt& g : gates_) {
      builder.gate(g.id, g.type, g.children);
      for (const std::string& c : g.children) declare_event(c);
    }
    for (const AttrStmt& a : attrs_) declare_event(a.id);
    declare_event(toplevel_);
    builder.root(toplevel_);

    Model model;
    model.name = name;
    model.tree = builder.build();
    for (const AttrStmt& a : attrs_) {
      try {
        if (const double* p = std::get_if<double>(&a.value)) {
          model.attribution.set_crisp(a.id, *p);
        } else {
          model.attribution.set_fuzzy(a.id, std::get<FuzzyNumber>(a.value));
        }
      } catch (const std::exception& e) {
        throw ParseError(e.what(), a.line);
      }
    }
    model.attribution.ensure_covers(model.tree);
    return model;
  }

 private:
  void bump() {
    if (cur_.kind != Token::kEnd) prev_ = cur_;
    cur_ = lexer_.next();
  }

  // Errors at end of input point at the last real token, which sits on the
  // unterminated statement rather than past the final newline.
  int error_line() const { return cur_.kind == Token::kEnd ? prev_.line : cur_.line; }
  int error_column() const {
    return cur_.kind == Token::kEnd ? prev_.column : cur_.column;
  }

  Token expect_word(const char* what) {
    if (cur_.kind != Token::kWord) {
      throw ParseError(std::string("expected ") + what + ", got '" +
                           (cur_.kind == Token::kEnd ? std::string("end of input") : cur_.text) +
                           "'",
                       error_line(), error_column());
    }
    Token tok = cur_;
    bump();
    return tok;
  }

  void expect_punct(char c) {
    if (cur_.kind != Token::kPunct || cur_.text[0] != c) {
      throw ParseError(std::string("expected '") + c + "', got '" +
                           (cur_.kind == Token::kEnd ? std::string("end of input") : cur_.text) +
                           "'",
                       error_line(), error_column());
    }
    bump();
  }

  void statement() {
    Token head = expect_word("an identifier or 'toplevel'");
    if (head.text == "toplevel") {
      Token id = expect_word("the toplevel identifier");
      check_identifier(id);
      expect_punct(';');
      if (!toplevel_.empty()) {
        throw ParseError("duplicate toplevel declaration", head.line, head.column);
      }
      toplevel_ = id.text;
      return;
    }
    check_identifier(head);
    Token kind = expect_word("'and', 'or', or an attribution");
    if (kind.text == "and" || kind.text == "or") {
      GateStmt g;
      g.id = head.text;
      g.type = kind.text == "and" ? NodeType::kAnd : NodeType::kOr;
      g.line = head.line;
      while (cur_.kind == Token::kWord) {
        check_identifier(cur_);
        g.children.push_back(cur_.text);
        bump();
      }
      expect_punct(';');
      if (g.children.empty()) {
        throw ParseError("gate '" + g.id + "' has no children", head.line, head.column);
      }
      gates_.push_back(std::move(g));
      return;
    }
    AttrStmt a;
    a.id = head.text;
    a.line = head.line;
    expect_punct('=');
    try {
      if (kind.text == "prob") {
        a.value = parse_real(take_word());
      } else if (kind.text == "tri") {
        const double x = next_real(), y = next_comma_real(), z = next_comma_real();
        a.value = FuzzyNumber(Triangular(x, y, z));
      } else if (kind.text == "trap") {
        const double x = next_real(), y = next_comma_real(), z = next_comma_real(),
                     w = next_comma_real();
        a.value = FuzzyNumber(Trapezoidal(x, y, z, w));
      } else if (kind.text == "gauss") {
        const double m = next_real(), d = next_comma_real();
        a.value = FuzzyNumber(Gaussian(m, d));
      } else if (kind.text == "discrete") {
        std::vector<DiscreteFuzzy::Entry> entries;
        bool first = true;
        do {
          if (!first) expect_punct(',');
          first = false;
          const double v = next_real();
          expect_punct(':');
          const double m = next_real();
          entries.push_back({v, m});
        } while (cur_.kind == Token::kPunct && cur_.text[0] == ',');
        a.value = FuzzyNumber(DiscreteFuzzy(std::move(entries)));
      } else {
        throw ParseError("unknown attribution kind '" + kind.text + "'", kind.line, kind.column);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      // Constructor rejections (ordering, ranges) gain a source position.
      throw ParseError(e.what(), head.line, head.column);
    }
    expect_punct(';');
    attrs_.push_back(std::move(a));
  }

  Token take_word() {
    Token tok = expect_word("a number");
    return tok;
  }

  double next_real() { return parse_real(take_word()); }

  double next_comma_real() {
    expect_punct(',');
    return next_real();
  }

  Lexer lexer_;
  Token cur_;
  Token prev_;
  std::string toplevel_;
  std::vector<GateStmt> gates_;
  std::vector<AttrStmt> attrs_;
};

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name.empty() ? "model" : name;
}

}  // namespace

Model parse_model(const std::string& text, const std::string& name) {
  Parser parser(text);
  parser.run();
  return parser.assemble(name);
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), file_stem(path));
}

std::string serialize_model(const Model& model) {
  const FaultTree& tree = model.tree;
  std::string out = "toplevel " + tree.node(tree.root()).id + ";\n";

  // Gates in depth-first preorder; each gate printed at first visit.
  std::vector<char> visited(tree.nodes().size(), 0);
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (visited[static_cast<std::size_t>(v)]) continue;
    visited[static_cast<std::size_t>(v)] = 1;
    const FtNode& nd = tree.node(v);
    if (nd.type == NodeType::kBasicEvent) continue;
    out += nd.id;
    out += nd.type == NodeType::kAnd ? " and" : " or";
    for (int c : nd.children) {
      out += ' ';
      out += tree.node(c).id;
    }
    out += ";\n";
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back(*it);
  }

  for (int be : tree.basic_events()) {
    const std::string& id = tree.node(be).id;
    const Attribution::Value& v = model.attribution.value(id);
    out += id;
    if (const double* p = std::get_if<double>(&v)) {
      out += " prob=" + format_real(*p);
    } else {
      const FuzzyNumber& f = std::get<FuzzyNumber>(v);
      if (const Triangular* tri = std::get_if<Triangular>(&f)) {
        out += " tri=" + format_real(tri->a) + "," + format_real(tri->b) + "," +
               format_real(tri->d);
      } else if (const Trapezoidal* trap = std::get_if<Trapezoidal>(&f)) {
        out += " trap=" + format_real(trap->a) + "," + format_real(trap->b) + "," +
               format_real(trap->c) + "," + format_real(trap->d);
      } else if (const Gaussian* g = std::get_if<Gaussian>(&f)) {
        out += " gauss=" + format_real(g->mean) + "," + format_real(g->dev);
      } else {
        const DiscreteFuzzy& d = std::get<DiscreteFuzzy>(f);
        out += " discrete=";
        bool first = true;
        for (const DiscreteFuzzy::Entry& e : d.support()) {
          if (!first) out += ",";
          first = false;
          out += format_real(e.value) + ":" + format_real(e.membership);
        }
      }
    }
    out += ";\n";
  }
  return out;
}

}  // namespace fuzzfta
