// Copyright 2026 The gpa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gpa/text_format.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace gpa {

namespace {

enum class Tok { Ident, Colon, Arrow, Star, Comma, LBrace, RBrace, Newline, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    i += count;
    column += count;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      tokens.push_back({Tok::Newline, "\n", line, column});
      ++i;
      ++line;
      column = 1;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (ident_char(c)) {
      const std::size_t start = i;
      const std::size_t start_column = column;
      while (i < text.size() && ident_char(text[i])) advance(1);
      tokens.push_back({Tok::Ident, std::string(text.substr(start, i - start)), line, start_column});
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      tokens.push_back({Tok::Arrow, "->", line, column});
      advance(2);
    } else {
      Tok kind;
      switch (c) {
        case ':': kind = Tok::Colon; break;
        case '*': kind = Tok::Star; break;
        case ',': kind = Tok::Comma; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        default:
          throw ParseError(line, column, std::string("unexpected character '") + c + "'");
      }
      tokens.push_back({kind, std::string(1, c), line, column});
      advance(1);
    }
  }
  tokens.push_back({Tok::End, "", line, column});
  return tokens;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Newline: return "end of line";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

struct RawBlock {
  std::string kind;  // gamma, quiver or algebra
  std::string name;  // algebra vertex
  Token head;
  Token name_token;
  BoundQuiver bound;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  std::vector<RawBlock> blocks() {
    std::vector<RawBlock> out;
    skip_newlines();
    while (peek().kind != Tok::End) {
      out.push_back(block());
      skip_newlines();
    }
    if (out.empty()) throw ParseError(peek().line, peek().column, "expected at least one block");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) ++pos_;
  }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw ParseError(t.line, t.column, "expected " + expected + ", found " + describe(t));
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    return take();
  }

  void end_of_line() {
    if (peek().kind == Tok::Newline) {
      take();
    } else if (peek().kind != Tok::RBrace) {
      fail(peek(), "end of line");
    }
  }

  RawBlock block() {
    RawBlock b;
    b.head = expect(Tok::Ident, "block keyword");
    b.kind = b.head.text;
    if (b.kind == "algebra") {
      b.name_token = expect(Tok::Ident, "gamma vertex name");
      b.name = b.name_token.text;
    } else if (b.kind != "gamma" && b.kind != "quiver") {
      throw ParseError(b.head.line, b.head.column,
                       "unknown block '" + b.kind + "' (expected gamma, quiver or algebra)");
    }
    skip_newlines();
    expect(Tok::LBrace, "'{'");

    std::vector<std::string> vertices;
    std::set<std::string> vertex_set;
    std::vector<Arrow> arrows;
    std::map<std::string, std::size_t> arrow_at;
    std::vector<Path> relations;

    while (true) {
      skip_newlines();
      if (peek().kind == Tok::RBrace) {
        take();
        break;
      }
      const Token& keyword = expect(Tok::Ident, "'vertices', 'arrow', 'relations' or '}'");
      if (keyword.text == "vertices") {
        expect(Tok::Colon, "':'");
        if (peek().kind != Tok::Ident) fail(peek(), "vertex name");
        while (peek().kind == Tok::Ident) {
          const Token& v = take();
          if (!vertex_set.insert(v.text).second) {
            throw ParseError(v.line, v.column, "duplicate vertex '" + v.text + "'");
          }
          vertices.push_back(v.text);
        }
        end_of_line();
      } else if (keyword.text == "arrow") {
        const Token& id = expect(Tok::Ident, "arrow name");
        expect(Tok::Colon, "':'");
        const Token& from = expect(Tok::Ident, "source vertex");
        expect(Tok::Arrow, "'->'");
        const Token& to = expect(Tok::Ident, "target vertex");
        for (const Token* end : {&from, &to}) {
          if (!vertex_set.count(end->text)) {
            throw ParseError(end->line, end->column, "unknown vertex '" + end->text + "'");
          }
        }
        if (!arrow_at.emplace(id.text, arrows.size()).second) {
          throw ParseError(id.line, id.column, "duplicate arrow '" + id.text + "'");
        }
        arrows.push_back({id.text, from.text, to.text});
        end_of_line();
      } else if (keyword.text == "relations") {
        if (b.kind == "gamma") {
          throw ParseError(keyword.line, keyword.column, "the gamma block carries no relations");
        }
        expect(Tok::Colon, "':'");
        while (true) {
          relations.push_back(relation(arrows, arrow_at));
          if (peek().kind != Tok::Comma) break;
          take();
          skip_newlines();
        }
        end_of_line();
      } else {
        throw ParseError(keyword.line, keyword.column,
                         "unknown line '" + keyword.text + "' (expected vertices, arrow or relations)");
      }
    }
    b.bound = {Quiver(std::move(vertices), std::move(arrows)), MonomialIdeal(std::move(relations))};
    return b;
  }

  Path relation(const std::vector<Arrow>& arrows, const std::map<std::string, std::size_t>& arrow_at) {
    std::vector<const Token*> parts{&expect(Tok::Ident, "relation")};
    while (peek().kind == Tok::Star) {
      take();
      parts.push_back(&expect(Tok::Ident, "arrow name after '*'"));
    }
    if (parts.size() < 2) {
      throw ParseError(parts[0]->line, parts[0]->column,
                       "relation needs at least two arrows joined by '*'");
    }
    std::vector<std::string> ids;
    std::optional<std::size_t> previous;
    for (const Token* t : parts) {
      const auto it = arrow_at.find(t->text);
      if (it == arrow_at.end()) {
        throw ParseError(t->line, t->column, "unknown arrow '" + t->text + "'");
      }
      if (previous && arrows[*previous].target != arrows[it->second].source) {
        throw ParseError(t->line, t->column,
                         "arrow '" + t->text + "' does not start where '" + arrows[*previous].id + "' ends");
      }
      previous = it->second;
      ids.push_back(t->text);
    }
    return Path(std::move(ids));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

void render_quiver_body(std::ostringstream& out, const BoundQuiver& bq) {
  const Quiver& q = bq.quiver;
  if (q.vertex_count() > 0) {
    out << "  vertices:";
    for (const auto& v : q.vertices()) out << ' ' << v;
    out << '\n';
  }
  for (const auto& a : q.arrows()) out << "  arrow " << a.id << ": " << a.source << " -> " << a.target << '\n';
}

void render_relations(std::ostringstream& out, const MonomialIdeal& ideal) {
  if (ideal.empty()) return;
  out << "  relations: ";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i > 0) out << ", ";
    out << ideal.generators()[i].to_string();
  }
  out << '\n';
}

}  // namespace

GpAlgebra GpDocument::algebra() const {
  return GpAlgebra(gamma, std::map<std::string, BoundQuiver>(algebras.begin(), algebras.end()));
}

InputDocument parse(std::string_view text) {
  Parser parser(text);
  const std::vector<RawBlock> blocks = parser.blocks();

  const RawBlock* gamma = nullptr;
  const RawBlock* quiver = nullptr;
  for (const RawBlock& b : blocks) {
    if (b.kind == "algebra") continue;
    const RawBlock*& slot = b.kind == "gamma" ? gamma : quiver;
    if (slot) throw ParseError(b.head.line, b.head.column, "duplicate " + b.kind + " block");
    slot = &b;
  }
  if (quiver) {
    if (blocks.size() > 1) {
      throw ParseError(blocks[1].head.line, blocks[1].head.column,
                       "a quiver file holds a single quiver block");
    }
    return QuiverDocument{quiver->bound};
  }
  if (!gamma) {
    throw ParseError(blocks.front().head.line, blocks.front().head.column,
                     "algebra blocks need a gamma block");
  }

  GpDocument doc;
  doc.gamma = gamma->bound.quiver;
  std::set<std::string> seen;
  for (const RawBlock& b : blocks) {
    if (b.kind != "algebra") continue;
    if (!doc.gamma.vertex_index(b.name)) {
      throw ParseError(b.name_token.line, b.name_token.column,
                       "algebra block names unknown gamma vertex '" + b.name + "'");
    }
    if (!seen.insert(b.name).second) {
      throw ParseError(b.name_token.line, b.name_token.column,
                       "duplicate algebra block for vertex '" + b.name + "'");
    }
    doc.algebras.emplace_back(b.name, b.bound);
  }
  return doc;
}

std::string render(const GpDocument& doc) {
  std::ostringstream out;
  out << "gamma {\n";
  render_quiver_body(out, {doc.gamma, {}});
  out << "}\n";
  for (const auto& [vertex, algebra] : doc.algebras) {
    out << "algebra " << vertex << " {\n";
    render_quiver_body(out, algebra);
    render_relations(out, algebra.ideal);
    out << "}\n";
  }
  return out.str();
}

std::string render(const QuiverDocument& doc) {
  std::ostringstream out;
  out << "quiver {\n";
  render_quiver_body(out, doc.quiver);
  render_relations(out, doc.quiver.ideal);
  out << "}\n";
  return out.str();
}

std::string render(const InputDocument& doc) {
  return std::visit([](const auto& d) { return render(d); }, doc);
}

GpDocument to_document(const GpAlgebra& gp) {
  GpDocument doc;
  doc.gamma = gp.gamma();
  for (std::size_t i = 0; i < gp.gamma().vertex_count(); ++i) {
    if (gp.is_explicit(i)) doc.algebras.emplace_back(gp.gamma().vertices()[i], gp.algebra(i));
  }
  return doc;
}

std::string render_ordinary_quiver(const OrdinaryQuiver& oq) {
  std::ostringstream out;
  const Quiver& q = oq.quiver;
  out << "quiver {\n";
  if (q.vertex_count() > 0) {
    out << "  vertices:";
    for (const auto& v : q.vertices()) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    out << "  arrow " << arrow.id << ": " << arrow.source << " -> " << arrow.target
        << (oq.arrow_types[a] == ArrowType::TypeI ? "  # typeI" : "  # typeII") << '\n';
  }
  render_relations(out, oq.lifted_ideal);
  out << "}\n";
  return out.str();
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string relations_label(const MonomialIdeal& ideal) {
  std::string relations;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    relations += (i ? ", " : "") + ideal.generators()[i].to_string();
  }
  return "  label=" + quoted("relations: " + (relations.empty() ? std::string("none") : relations)) + ";\n";
}

}  // namespace

std::string render_dot(const OrdinaryQuiver& oq, const GpAlgebra& gp) {
  const Quiver& q = oq.quiver;
  std::ostringstream out;
  out << "digraph Q {\n" << relations_label(oq.lifted_ideal);
  for (std::size_t block = 0; block < gp.gamma().vertex_count(); ++block) {
    out << "  subgraph cluster_" << block << " {\n";
    out << "    label=" << quoted(gp.gamma().vertices()[block]) << ";\n";
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      if (oq.vertex_origins[v].block == block) out << "    " << quoted(q.vertices()[v]) << ";\n";
    }
    out << "  }\n";
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrows()[a];
    out << "  " << quoted(arrow.source) << " -> " << quoted(arrow.target) << " [label=" << quoted(arrow.id)
        << (oq.arrow_types[a] == ArrowType::TypeI ? " style=solid color=black" : " color=blue") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_dot(const BoundQuiver& bq) {
  std::ostringstream out;
  out << "digraph Q {\n" << relations_label(bq.ideal);
  for (const auto& v : bq.quiver.vertices()) out << "  " << quoted(v) << ";\n";
  for (const Arrow& arrow : bq.quiver.arrows()) {
    out << "  " << quoted(arrow.source) << " -> " << quoted(arrow.target) << " [label=" << quoted(arrow.id)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gpa
