/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#ifndef HUME_PARSER_HPP
#define HUME_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

// Reader and writer for universe description files.
//
// The format is line oriented:
//
//   universe NAME
//   object NAME+
//   concept NAME = { NAME* }
//   relation NAME = { (NAME,NAME)* }
//
// '#' starts a comment, whitespace within a line is free, commas between
// list items are optional, and declarations may appear in any order as long
// as objects are declared before use. Names match [A-Za-z_][A-Za-z0-9_]*.

namespace hume {

struct SourcePos {
  std::size_t line = 0;    // 1-based
  std::size_t column = 0;  // 1-based

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct Diagnostic {
  SourcePos pos;
  std::string message;
  std::string token;  // offending token, possibly empty at end of line
};

enum class DeclKind { universe, object, concept_decl, relation_decl };

struct DeclarationSite {
  DeclKind kind;
  std::string name;
  SourcePos pos;
};

struct UniverseDocument {
  std::string source;
  Universe universe;
  std::vector<DeclarationSite> declarations;  // in file order
};

struct ParseResult {
  std::optional<UniverseDocument> document;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return document.has_value(); }
};

ParseResult parse_universe(std::string_view text);

// Canonical text form: one object line in ordinal order, concepts and
// relations sorted by name, members and pairs sorted by ordinal. Reparsing
// the output yields an equal universe.
std::string serialize(const Universe& universe);

// One "line:column: error: message" line per diagnostic.
std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics);

}  // namespace hume

#endif  // HUME_PARSER_HPP
