/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "parser.hpp"

#include <cctype>
#include <sstream>

namespace hume {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
  bool is_name = false;    // lexed as a word rather than punctuation
};

// One line's worth of tokens; '#' cuts the line off.
std::vector<Token> lex_line(std::string_view line,
                            std::vector<Diagnostic>& diagnostics,
                            std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_name_char(c)) {
      std::size_t start = i;
      while (i < line.size() && is_name_char(line[i])) ++i;
      tokens.push_back(
          {std::string(line.substr(start, i - start)), start + 1, true});
      continue;
    }
    if (c == '=' || c == '{' || c == '}' || c == '(' || c == ')' ||
        c == ',') {
      tokens.push_back({std::string(1, c), i + 1, false});
      ++i;
      continue;
    }
    diagnostics.push_back({{line_no, i + 1},
                           "unexpected character",
                           std::string(1, c)});
    return {};
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no,
             std::vector<Diagnostic>& diagnostics)
      : tokens_(std::move(tokens)), line_(line_no), diagnostics_(diagnostics) {}

  bool at_end() const { return pos_ >= tokens_.size(); }

  const Token* peek() const { return at_end() ? nullptr : &tokens_[pos_]; }

  const Token* take() { return at_end() ? nullptr : &tokens_[pos_++]; }

  bool accept_punct(char c) {
    if (!at_end() && !tokens_[pos_].is_name && tokens_[pos_].text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token* expect_name(const std::string& what) {
    const Token* t = take();
    if (!t || !t->is_name || !is_name_start(t->text[0])) {
      fail("expected " + what, t);
      return nullptr;
    }
    return t;
  }

  bool expect_punct(char c) {
    const Token* t = take();
    if (!t || t->is_name || t->text[0] != c) {
      fail(std::string("expected '") + c + "'", t);
      return false;
    }
    return true;
  }

  bool expect_end() {
    if (at_end()) return true;
    fail("expected end of line", peek());
    return false;
  }

  void fail(const std::string& message, const Token* at) {
    std::size_t column =
        at ? at->column
           : (tokens_.empty() ? 1 : tokens_.back().column +
                                        tokens_.back().text.size());
    diagnostics_.push_back(
        {{line_, column}, message, at ? at->text : std::string()});
  }

  SourcePos pos_of(const Token& t) const { return {line_, t.column}; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
  std::vector<Diagnostic>& diagnostics_;
};

class DocumentParser {
 public:
  explicit DocumentParser(std::string_view text) : text_(text) {}

  ParseResult run() {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text_.size()) {
      std::size_t newline = text_.find('\n', start);
      std::string_view line =
          newline == std::string_view::npos
              ? text_.substr(start)
              : text_.substr(start, newline - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      parse_line(line, line_no);
      if (newline == std::string_view::npos) break;
      start = newline + 1;
    }

    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    if (result.diagnostics.empty()) {
      result.document = UniverseDocument{std::string(text_),
                                         std::move(universe_),
                                         std::move(declarations_)};
    }
    return result;
  }

 private:
  void parse_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> tokens = lex_line(line, diagnostics_, line_no);
    if (tokens.empty()) return;

    LineParser p(std::move(tokens), line_no, diagnostics_);
    const Token* keyword = p.take();
    if (!keyword->is_name) {
      p.fail("expected a declaration keyword", keyword);
      return;
    }
    if (keyword->text == "universe") {
      parse_universe_decl(p);
    } else if (keyword->text == "object") {
      parse_object_decl(p);
    } else if (keyword->text == "concept") {
      parse_concept_decl(p);
    } else if (keyword->text == "relation") {
      parse_relation_decl(p);
    } else {
      p.fail("unknown declaration keyword", keyword);
    }
  }

  void parse_universe_decl(LineParser& p) {
    const Token* name = p.expect_name("a universe name");
    if (!name || !p.expect_end()) return;
    if (saw_universe_) {
      p.fail("duplicate universe declaration", name);
      return;
    }
    saw_universe_ = true;
    universe_.set_name(name->text);
    declarations_.push_back(
        {DeclKind::universe, name->text, p.pos_of(*name)});
  }

  void parse_object_decl(LineParser& p) {
    bool any = false;
    while (!p.at_end()) {
      if (any && p.accept_punct(',')) continue;
      const Token* name = p.expect_name("an object name");
      if (!name) return;
      any = true;
      if (universe_.find_object(name->text)) {
        p.fail("object is already declared", name);
        continue;
      }
      universe_.declare_object(name->text);
      declarations_.push_back({DeclKind::object, name->text, p.pos_of(*name)});
    }
    if (!any) p.fail("expected at least one object name", nullptr);
  }

  void parse_concept_decl(LineParser& p) {
    const Token* name = p.expect_name("a concept name");
    if (!name) return;
    if (!p.expect_punct('=') || !p.expect_punct('{')) return;

    std::vector<ObjectId> extension;
    bool bad = false;
    bool first = true;
    while (!p.accept_punct('}')) {
      if (!first && p.accept_punct(',')) continue;
      const Token* member = p.expect_name("an object name or '}'");
      if (!member) return;
      first = false;
      auto id = universe_.find_object(member->text);
      if (!id) {
        p.fail("undeclared object", member);
        bad = true;
        continue;
      }
      extension.push_back(*id);
    }
    if (!p.expect_end() || bad) return;
    if (universe_.find_concept(name->text)) {
      p.fail("concept is already defined", name);
      return;
    }
    universe_.define_concept(name->text, std::move(extension));
    declarations_.push_back(
        {DeclKind::concept_decl, name->text, p.pos_of(*name)});
  }

  void parse_relation_decl(LineParser& p) {
    const Token* name = p.expect_name("a relation name");
    if (!name) return;
    if (!p.expect_punct('=') || !p.expect_punct('{')) return;

    std::vector<ObjectPair> pairs;
    bool bad = false;
    bool first = true;
    while (!p.accept_punct('}')) {
      if (!first && p.accept_punct(',')) continue;
      if (!p.expect_punct('(')) return;
      first = false;
      const Token* source = p.expect_name("an object name");
      if (!source || !p.expect_punct(',')) return;
      const Token* target = p.expect_name("an object name");
      if (!target || !p.expect_punct(')')) return;

      auto source_id = universe_.find_object(source->text);
      if (!source_id) {
        p.fail("undeclared object", source);
        bad = true;
      }
      auto target_id = universe_.find_object(target->text);
      if (!target_id) {
        p.fail("undeclared object", target);
        bad = true;
      }
      if (source_id && target_id) pairs.emplace_back(*source_id, *target_id);
    }
    if (!p.expect_end() || bad) return;
    if (universe_.find_relation(name->text)) {
      p.fail("relation is already defined", name);
      return;
    }
    universe_.define_relation(name->text, std::move(pairs));
    declarations_.push_back(
        {DeclKind::relation_decl, name->text, p.pos_of(*name)});
  }

  std::string_view text_;
  Universe universe_;
  std::vector<DeclarationSite> declarations_;
  std::vector<Diagnostic> diagnostics_;
  bool saw_universe_ = false;
};

}  // namespace

ParseResult parse_universe(std::string_view text) {
  return DocumentParser(text).run();
}

std::string serialize(const Universe& universe) {
  std::ostringstream out;
  if (!universe.name().empty()) out << "universe " << universe.name() << "\n";
  if (universe.object_count() > 0) {
    out << "object";
    for (const std::string& symbol : universe.symbols()) out << ' ' << symbol;
    out << "\n";
  }
  for (const auto& [name, extent] : universe.concepts()) {
    out << "concept " << name << " = {";
    for (ObjectId id : extent.extension()) out << ' ' << universe.symbol(id);
    out << " }\n";
  }
  for (const auto& [name, relation] : universe.relations()) {
    out << "relation " << name << " = {";
    for (const auto& [s, t] : relation.pairs()) {
      out << " (" << universe.symbol(s) << ',' << universe.symbol(t) << ')';
    }
    out << " }\n";
  }
  return out.str();
}

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  for (const Diagnostic& d : diagnostics) {
    out << d.pos.line << ':' << d.pos.column << ": error: " << d.message;
    if (!d.token.empty()) out << " '" << d.token << "'";
    out << "\n";
  }
  return out.str();
}

}  // namespace hume
