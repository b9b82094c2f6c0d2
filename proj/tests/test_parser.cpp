/*
 * Copyright (c) 2026, the hume authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include "parser.hpp"
#include "test_support.hpp"

using namespace hume;

TEST_CASE("a small document parses into the expected universe") {
  ParseResult result = parse_universe(
      "universe U\n"
      "object a b\n"
      "concept F = { a }\n");
  REQUIRE(result.ok());
  const Universe& u = result.document->universe;
  CHECK(u.name() == "U");
  CHECK(u.object_count() == 2);
  REQUIRE(u.find_concept("F"));
  CHECK(u.find_concept("F")->extension() == support::ids({0}));
}

TEST_CASE("declarations carry source locations") {
  ParseResult result = parse_universe(
      "universe U\n"
      "object a\n"
      "concept F = { a }\n"
      "relation R = { (a,a) }\n");
  REQUIRE(result.ok());
  const auto& declarations = result.document->declarations;
  REQUIRE(declarations.size() == 4);
  CHECK(declarations[0].kind == DeclKind::universe);
  CHECK(declarations[0].pos == SourcePos{1, 10});
  CHECK(declarations[1].kind == DeclKind::object);
  CHECK(declarations[1].pos == SourcePos{2, 8});
  CHECK(declarations[2].name == "F");
  CHECK(declarations[2].pos == SourcePos{3, 9});
  CHECK(declarations[3].name == "R");
  CHECK(declarations[3].pos == SourcePos{4, 10});
}

TEST_CASE("comments, commas and stray whitespace are tolerated") {
  ParseResult result = parse_universe(
      "# heading comment\n"
      "universe   U\n"
      "\n"
      "object a, b , c\n"
      "concept F={a,b}  # trailing\n"
      "relation R = {(a,b),( b , c )}\n");
  REQUIRE(result.ok());
  CHECK(result.document->universe.find_concept("F")->size() == 2);
  CHECK(result.document->universe.find_relation("R")->size() == 2);
}

TEST_CASE("semantic errors carry line, column and token") {
  SUBCASE("undeclared object in a concept") {
    ParseResult result = parse_universe("concept F = { z }\n");
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].pos == SourcePos{1, 15});
    CHECK(result.diagnostics[0].token == "z");
    CHECK(result.diagnostics[0].message == "undeclared object");
  }
  SUBCASE("undeclared object in a relation") {
    ParseResult result = parse_universe("object a\nrelation R = { (a,z) }\n");
    REQUIRE_FALSE(result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].pos.line == 2);
    CHECK(result.diagnostics[0].token == "z");
  }
  SUBCASE("objects must precede use") {
    ParseResult result = parse_universe("concept F = { a }\nobject a\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].pos.line == 1);
  }
  SUBCASE("duplicate names per category") {
    CHECK_FALSE(parse_universe("object a a\n").ok());
    CHECK_FALSE(parse_universe("object a\nconcept F = {}\nconcept F = {}\n")
                    .ok());
    CHECK_FALSE(
        parse_universe("object a\nrelation R = {}\nrelation R = {}\n").ok());
    CHECK_FALSE(parse_universe("universe U\nuniverse V\n").ok());
  }
}

TEST_CASE("syntax errors carry line, column and token") {
  SUBCASE("unknown keyword") {
    ParseResult result = parse_universe("objects a b\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].message == "unknown declaration keyword");
    CHECK(result.diagnostics[0].token == "objects");
  }
  SUBCASE("missing brace") {
    ParseResult result = parse_universe("object a\nconcept F = { a\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].pos.line == 2);
  }
  SUBCASE("malformed pair") {
    CHECK_FALSE(parse_universe("object a\nrelation R = { (a) }\n").ok());
    CHECK_FALSE(parse_universe("object a\nrelation R = { a,a }\n").ok());
  }
  SUBCASE("unexpected character") {
    ParseResult result = parse_universe("object a$b\n");
    REQUIRE_FALSE(result.ok());
    CHECK(result.diagnostics[0].pos == SourcePos{1, 9});
    CHECK(result.diagnostics[0].token == "$");
  }
  SUBCASE("names may not start with a digit") {
    CHECK_FALSE(parse_universe("object 1a\n").ok());
  }
  SUBCASE("missing name") {
    CHECK_FALSE(parse_universe("object\n").ok());
    CHECK_FALSE(parse_universe("universe\n").ok());
  }
  SUBCASE("trailing tokens") {
    CHECK_FALSE(parse_universe("universe U V\n").ok());
  }
}

TEST_CASE("multiple errors are all reported") {
  ParseResult result = parse_universe(
      "concept F = { z }\n"
      "concept G = { y }\n");
  REQUIRE_FALSE(result.ok());
  CHECK(result.diagnostics.size() == 2);
  CHECK(result.diagnostics[0].pos.line == 1);
  CHECK(result.diagnostics[1].pos.line == 2);
}

TEST_CASE("serialization is canonical") {
  ParseResult result = parse_universe(
      "universe U\n"
      "object b a\n"
      "relation S = { (a,b) }\n"
      "concept G = { }\n"
      "concept F = { a, b }\n");
  REQUIRE(result.ok());
  CHECK(serialize(result.document->universe) ==
        "universe U\n"
        "object b a\n"
        "concept F = { b a }\n"
        "concept G = { }\n"
        "relation S = { (a,b) }\n");
}

TEST_CASE("parse then serialize then parse is the identity") {
  std::mt19937_64 rng(59);
  for (std::size_t i = 0; i < 100; ++i) {
    std::string text = support::random_document(rng, i);
    CAPTURE(text);
    ParseResult first = parse_universe(text);
    REQUIRE(first.ok());
    std::string canonical = serialize(first.document->universe);
    ParseResult second = parse_universe(canonical);
    REQUIRE(second.ok());
    CHECK(first.document->universe == second.document->universe);
    // A canonical document is a fixed point.
    CHECK(serialize(second.document->universe) == canonical);
  }
}

TEST_CASE("empty input is a valid empty universe") {
  ParseResult result = parse_universe("");
  REQUIRE(result.ok());
  CHECK(result.document->universe.object_count() == 0);
  CHECK(serialize(result.document->universe).empty());
}

TEST_CASE("diagnostics render as line:column messages") {
  ParseResult result = parse_universe("concept F = { z }\n");
  REQUIRE_FALSE(result.ok());
  CHECK(render_diagnostics(result.diagnostics) ==
        "1:15: error: undeclared object 'z'\n");
}
